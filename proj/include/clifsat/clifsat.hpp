#pragma once

#include "clifsat/cnf.hpp"
#include "clifsat/limits.hpp"
#include "clifsat/truth_table.hpp"
#include "clifsat/clifford.hpp"
#include "clifsat/oracle.hpp"
#include "clifsat/signed_sum.hpp"
