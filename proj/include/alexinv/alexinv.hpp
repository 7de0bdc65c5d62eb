#pragma once

#include "alexinv/error.hpp"
#include "alexinv/rational.hpp"
#include "alexinv/upoly.hpp"
#include "alexinv/laurent.hpp"
#include "alexinv/cyclotomic.hpp"
#include "alexinv/cyclo_product.hpp"
#include "alexinv/matrix.hpp"
#include "alexinv/polytope.hpp"
#include "alexinv/group.hpp"
#include "alexinv/charvar.hpp"
#include "alexinv/braid.hpp"
#include "alexinv/poly_parse.hpp"
#include "alexinv/bivariate.hpp"
#include "alexinv/resolution.hpp"
#include "alexinv/local_invariants.hpp"
#include "alexinv/quasiadjunction.hpp"
#include "alexinv/curve_global.hpp"
#include "alexinv/io.hpp"
#include "alexinv/cli.hpp"
