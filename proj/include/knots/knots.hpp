/** Umbrella header: the whole library. */

#ifndef KNOTS_KNOTS_HPP
#define KNOTS_KNOTS_HPP

#include "knots/errors.hpp"
#include "knots/polyring/algorithms.hpp"
#include "knots/polyring/chebyshev.hpp"
#include "knots/polyring/io.hpp"
#include "knots/polyring/multipoly.hpp"
#include "knots/polyring/roots.hpp"
#include "knots/words/fox.hpp"
#include "knots/words/group_word.hpp"
#include "knots/words/mat2.hpp"
#include "knots/twistknot/model.hpp"
#include "knots/apoly/apolynomial.hpp"
#include "knots/apoly/criterion.hpp"
#include "knots/apoly/csv.hpp"
#include "knots/apoly/newton.hpp"
#include "knots/splice/bending.hpp"
#include "knots/splice/characters.hpp"
#include "knots/splice/system.hpp"
#include "knots/splice/tolerances.hpp"
#include "knots/splice/torsion.hpp"
#include "knots/splice/torus.hpp"
#include "knots/verify/acceptance.hpp"
#include "knots/verify/chain_complex.hpp"

#endif
