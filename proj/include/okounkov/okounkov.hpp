#pragma once
// Umbrella header.

#include "okounkov/bodies.hpp"
#include "okounkov/catalog.hpp"
#include "okounkov/cone.hpp"
#include "okounkov/decompose.hpp"
#include "okounkov/lp.hpp"
#include "okounkov/matrix.hpp"
#include "okounkov/model.hpp"
#include "okounkov/poly_io.hpp"
#include "okounkov/polynomial.hpp"
#include "okounkov/polytope.hpp"
#include "okounkov/rational.hpp"
#include "okounkov/report.hpp"
#include "okounkov/semigroup.hpp"
#include "okounkov/serialize.hpp"
#include "okounkov/validate.hpp"
#include "okounkov/valuation.hpp"
#include "okounkov/verify.hpp"
#include "okounkov/weight.hpp"
