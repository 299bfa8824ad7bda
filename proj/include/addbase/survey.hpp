#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addbase/parallel.hpp"
#include "addbase/sumset.hpp"

namespace addbase {

inline constexpr std::uint64_t kDefaultSurveyBudget = std::uint64_t{1} << 14;

/// One qualifying subset of Z/n: bit i of setMask selects residue i.
struct SurveyRow {
  std::string groupSpec;
  int weakOrderCap = 0;
  std::uint64_t setMask = 0;
  int niceOrder = 0;
  bool isMaxForGroup = false;
};

struct SurveyGroup {
  std::string groupSpec;
  std::size_t qualifying = 0;
  int maxNiceOrder = 0;
  std::vector<std::uint64_t> argmaxMasks;
};

struct SurveyResult {
  int hCap = 0;
  int nMax = 0;
  std::vector<SurveyGroup> groups;
  std::vector<SurveyRow> rows;
};

/// For each 2 <= n <= nMax, every subset of Z/n with <A - A> = Z/n and weak
/// order <= hCap. Rows come out n ascending, mask ascending.
inline SurveyResult survey_smallh(int hCap, int nMax, unsigned threads = 1,
                                  std::uint64_t budget = kDefaultSurveyBudget) {
  if (hCap < 1) fail(ErrorCode::BadParameters, "hCap must be >= 1");
  if (nMax < 2) fail(ErrorCode::BadParameters, "nMax must be >= 2");
  if (nMax >= 63 || (std::uint64_t{1} << nMax) > budget)
    fail(ErrorCode::BudgetExceeded,
         "nMax = " + std::to_string(nMax) + " needs 2^" + std::to_string(nMax) + " subsets, budget " +
             std::to_string(budget));
  SurveyResult out;
  out.hCap = hCap;
  out.nMax = nMax;
  for (int n = 2; n <= nMax; ++n) {
    const auto group = make_group({n});
    const std::uint64_t total = (std::uint64_t{1} << n) - 1;
    std::vector<std::vector<std::pair<std::uint64_t, int>>> parts(kDefaultShards);
    parallel_shards(total, threads, kDefaultShards, [&](std::size_t s, std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const std::uint64_t mask = i + 1;
        const auto p = order_profile(GroupSubset::from_mask(group, mask));
        if (p.generatesByDifferences && p.weakNiceOrder && *p.weakNiceOrder <= hCap)
          parts[s].emplace_back(mask, *p.niceOrder);
      }
    });
    SurveyGroup sg;
    sg.groupSpec = group->spec();
    const std::size_t first_row = out.rows.size();
    for (const auto& part : parts) {
      for (const auto& [mask, nice] : part) {
        out.rows.push_back(SurveyRow{sg.groupSpec, hCap, mask, nice, false});
        sg.maxNiceOrder = std::max(sg.maxNiceOrder, nice);
      }
    }
    sg.qualifying = out.rows.size() - first_row;
    for (std::size_t r = first_row; r < out.rows.size(); ++r) {
      if (out.rows[r].niceOrder == sg.maxNiceOrder) {
        out.rows[r].isMaxForGroup = true;
        sg.argmaxMasks.push_back(out.rows[r].setMask);
      }
    }
    out.groups.push_back(std::move(sg));
  }
  return out;
}

}  // namespace addbase
