#pragma once

#include <vector>

#include "theta/gamma.hpp"

namespace theta {

/**
 * F_2 Betti numbers of K(π,n) in degrees 0..max_dim-1, computed without any
 * Θ_n machinery.
 *
 * n = 1: normalized chains of the nerve of π (bar construction).
 * n = 2: normalized total complex of the bisimplicial set obtained by
 *        restricting K(π,2) along the diagonal functor; a (p,q)-bisimplex is a
 *        p×q matrix over π, faces drop or merge rows and columns.
 * Throws UnsupportedError for n > 2.
 */
std::vector<int> oracle_multisimplicial(const FiniteAbelianGroup& pi, int n, int max_dim);

/**
 * Same numbers for n = 2 through the diagonal simplicial set (k×k matrices)
 * instead of the total complex. Exponential in max_dim²; meant for
 * max_dim <= 4.
 */
std::vector<int> oracle_diagonal(const FiniteAbelianGroup& pi, int max_dim);

}  // namespace theta
