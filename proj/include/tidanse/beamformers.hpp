#pragma once

#include <vector>

#include "tidanse/types.hpp"

namespace tidanse::beamformers {

// A multichannel estimation filter; apply as w^H * y. rank_used is the
// GEVD rank for low-rank filters and equals the full dimension otherwise.
struct Filter {
  CMat w;           // D x J
  Index rank_used;  // <= D
};

// LMMSE filter w = r_yy^{-1} r_ss E, with E selecting the columns in sel.
// Throws SingularCovariance when r_yy is singular or its condition number
// exceeds 1e12.
Filter mwf(const CMat& r_yy, const CMat& r_ss, const std::vector<int>& sel);

// Low-rank filter from the GEVD of the pencil {r_yy, r_nn}, keeping the
// rank largest generalized eigenvalues. Eigenvalues below one inside the
// kept block contribute zero (their desired-signal estimate would be
// negative).
Filter gevd_mwf(const CMat& r_yy, const CMat& r_nn, Index rank, const std::vector<int>& sel);

CMat apply_filter(const Filter& f, const CMat& y);

}  // namespace tidanse::beamformers
