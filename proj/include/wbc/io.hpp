#pragma once

#include <string>

#include "wbc/affine.hpp"
#include "wbc/bcrt.hpp"

namespace wbc {

// Expression syntax shared by the CLI and the element files: sums of
// products of atoms.  Atoms: rationals `p/q`, omegas `w3`, generators
// `e1 s2 sb1 c1 cb2 x1 xb1` (x_i / xbar_j allowed for any valid index),
// canonical monomials `x[..] c[..] D{..} cb[..] xb[..]`, and parentheses.
// `^` raises to a power.
AffElement parse_aff_element(const std::string& text, const AffineAlgebra& alg);

// Same grammar with the affine atoms rejected.
BCElement parse_bc_element(const std::string& text, const FiniteAlgebra& alg);

} // namespace wbc
