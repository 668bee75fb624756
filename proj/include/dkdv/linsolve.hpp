#pragma once

#include "dkdv/diffpoly.hpp"

#include <map>
#include <vector>

namespace dkdv {

/// Sparse exact linear system A x = b over Q(i).
struct LinearSystem {
    int ncols = 0;
    std::vector<std::map<int, GaussianRational>> rows;
    std::vector<GaussianRational> rhs;

    void add_row(std::map<int, GaussianRational> row, GaussianRational b) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(b));
    }
};

struct LinearSolution {
    bool consistent = false;
    int kernel_dim = 0;
    std::vector<GaussianRational> x; // particular solution, free variables set to 0
    int bad_row = -1;                // witness when inconsistent
};

/// Exact Gaussian elimination with first-nonzero pivoting.
LinearSolution solve_linear(const LinearSystem &sys);

/// Inverts dx on its image: returns q with dx(q) = p and zero constant term.
/// Throws std::domain_error when p is not a total x-derivative.
DiffPoly anti_dx(const DiffPoly &p);

/// All monomials with the given per-variable exponent signature, total jet
/// weight, and eps power.
std::vector<Monomial> monomials_with_signature(const RingPtr &ring, const std::vector<int> &sig,
                                               int weight, int eps);

} // namespace dkdv
