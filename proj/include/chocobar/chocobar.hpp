#pragma once

#include "chocobar/bar.hpp"
#include "chocobar/conditions.hpp"
#include "chocobar/errors.hpp"
#include "chocobar/function_spec.hpp"
#include "chocobar/grundy_table.hpp"
#include "chocobar/nim.hpp"
#include "chocobar/solver.hpp"
#include "chocobar/verify.hpp"
#include "chocobar/width_function.hpp"
