#pragma once

#include "apolar.hpp"
#include "catalog.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "hessian.hpp"
#include "lefschetz.hpp"
#include "linalg.hpp"
#include "parser.hpp"
#include "poly.hpp"
#include "poly_matrix.hpp"
#include "rational.hpp"
