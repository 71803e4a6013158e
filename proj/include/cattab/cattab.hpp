#pragma once

#include "bijections.hpp"
#include "binary_tree.hpp"
#include "combinatorics.hpp"
#include "error.hpp"
#include "lattice_path.hpp"
#include "rational.hpp"
#include "tableau.hpp"
#include "tasep.hpp"
