#ifndef VTWIST_VTWIST_HPP
#define VTWIST_VTWIST_HPP

#include "vtwist/bipoly.hpp"
#include "vtwist/charpoly.hpp"
#include "vtwist/errors.hpp"
#include "vtwist/factor.hpp"
#include "vtwist/hecke.hpp"
#include "vtwist/higgs.hpp"
#include "vtwist/irreducible.hpp"
#include "vtwist/matrix.hpp"
#include "vtwist/number_field.hpp"
#include "vtwist/poly.hpp"
#include "vtwist/projective_line.hpp"
#include "vtwist/ratfunc.hpp"
#include "vtwist/rational.hpp"
#include "vtwist/resultant.hpp"
#include "vtwist/spectral.hpp"
#include "vtwist/text.hpp"

#endif  // VTWIST_VTWIST_HPP
