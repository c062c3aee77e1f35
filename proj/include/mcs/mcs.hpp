#ifndef MCS_MCS_HPP
#define MCS_MCS_HPP

#include "mcs/certificate.hpp"
#include "mcs/colored_permutation.hpp"
#include "mcs/eulerian_polynomials.hpp"
#include "mcs/json_io.hpp"
#include "mcs/multichain.hpp"
#include "mcs/numeric.hpp"
#include "mcs/polynomial.hpp"
#include "mcs/poset.hpp"
#include "mcs/simplicial_complex.hpp"
#include "mcs/subdivisions.hpp"
#include "mcs/transforms.hpp"
#include "mcs/verify.hpp"

#endif
