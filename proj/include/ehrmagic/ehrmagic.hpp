#pragma once

#include "cl_analysis.hpp"
#include "conjectures.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "hstar.hpp"
#include "lattice_count.hpp"
#include "magic_basis.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "sturm.hpp"
