#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "addbase.hpp"

using namespace addbase;

int main(int argc, char** argv) {
  CLI::App app{"addbase: additive bases in finite abelian groups"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  std::string format = "json";
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::string group, set, construct;
  int h = 0, hCap = 2, nMax = 10;
  bool all = false;
  std::string suite, golden, tableOut;
  std::string kind;
  std::map<std::string, std::string> params;

  auto* order = app.add_subcommand("order", "order profile of a set");
  order->add_option("--group", group)->required();
  order->add_option("--set", set)->required();

  auto* cls = app.add_subcommand("classify", "exceptional elements of a basis");
  cls->add_option("--group", group)->required();
  auto* setOpt = cls->add_option("--set", set);
  auto* conOpt = cls->add_option("--construct", construct, "e.g. fpt:p=2,h=3");
  setOpt->excludes(conOpt);

  auto* con = app.add_subcommand("construct", "build and check a construction");
  con->add_option("kind", kind, "balanced-ternary | minimal | fpt | vsd | vs2check")->required();
  for (const char* key : {"n", "variant", "K", "h", "p", "d", "N", "alphas"}) {
    con->add_option_function<std::string>(std::string("--") + key,
                                          [&params, key](const std::string& v) { params[key] = v; });
  }

  auto* xl = app.add_subcommand("search-xlower", "two-element witness for the quadratic lower bound");
  xl->add_option("--h", h)->required();
  xl->add_flag("--all", all, "list every witness");

  auto* sv = app.add_subcommand("survey", "small-h survey over Z/n");
  sv->add_option("--hCap", hCap);
  sv->add_option("--nMax", nMax);
  sv->add_option("--table-out", tableOut, "TSV table path");

  auto* vf = app.add_subcommand("verify", "run verification suites");
  vf->add_option("--suite", suite)->required();
  vf->add_option("--golden", golden, "golden directory to compare against");

  auto* bd = app.add_subcommand("bounds", "upper and lower bound calculators");
  bd->add_option("--group", group)->required();
  bd->add_option("--h", h)->required();

  auto* ef = app.add_subcommand("efunctional", "max exceptional count at nice order h");
  ef->add_option("--group", group)->required();
  ef->add_option("--h", h)->required();

  auto* be = app.add_subcommand("bad-elements", "order of A without b for an order-2 basis");
  be->add_option("--group", group)->required();
  be->add_option("--set", set)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  HarnessOptions opt;
  opt.threads = threads;
  CommandResult r;
  try {
    opt.budget = env_budget();
  } catch (const Error& e) {
    std::cerr << "addbase: " << e.detail() << "\n";
    return exit_code(e.code());
  }

  if (order->parsed()) {
    r = cmd_order(group, set);
  } else if (cls->parsed()) {
    r = cmd_classify(group, set, construct);
  } else if (con->parsed()) {
    r = cmd_construct(kind, params, opt);
  } else if (xl->parsed()) {
    r = cmd_search_xlower(h, all, opt);
  } else if (sv->parsed()) {
    r = cmd_survey_smallh(hCap, nMax, opt, tableOut);
  } else if (vf->parsed()) {
    r = cmd_verify(suite, opt, golden);
  } else if (bd->parsed()) {
    r = cmd_bounds(group, h);
  } else if (ef->parsed()) {
    r = cmd_efunctional(group, h, opt);
  } else if (be->parsed()) {
    r = cmd_bad_elements(group, set);
  }

  if (format == "table")
    std::cout << render_table(r);
  else
    std::cout << dump_canonical(r.to_json());
  if (!r.ok()) std::cerr << "addbase: " << r.status.at("code").get<std::string>() << ": "
                         << r.status.at("message").get<std::string>() << "\n";
  return r.exitCode;
}
