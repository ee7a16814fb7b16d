#pragma once

// Umbrella header: finite AG-groups, fuzzy AG-subgroups, cosets, quotients,
// enumeration and theorem sweeps.

#include "agfuzz/ag_group.hpp"
#include "agfuzz/cayley_table.hpp"
#include "agfuzz/enumerate.hpp"
#include "agfuzz/error.hpp"
#include "agfuzz/fuzzy_subset.hpp"
#include "agfuzz/grade.hpp"
#include "agfuzz/homomorphism.hpp"
#include "agfuzz/io.hpp"
#include "agfuzz/quotient.hpp"
#include "agfuzz/report.hpp"
#include "agfuzz/sweep.hpp"
