#pragma once

#include "addbase/analysis.hpp"
#include "addbase/arith.hpp"
#include "addbase/bitset.hpp"
#include "addbase/constructions.hpp"
#include "addbase/error.hpp"
#include "addbase/group.hpp"
#include "addbase/group_spec.hpp"
#include "addbase/harness.hpp"
#include "addbase/json_io.hpp"
#include "addbase/parallel.hpp"
#include "addbase/subgroup.hpp"
#include "addbase/subset.hpp"
#include "addbase/sumset.hpp"
#include "addbase/survey.hpp"
#include "addbase/verify.hpp"
