#pragma once

#include <optional>
#include <random>
#include <vector>

#include "unicover/poly.hpp"
#include "unicover/tower.hpp"

namespace unicover {

/// The triangular system sigma - t^{n_0} w_0, Q_1 - t^{n_1} w_1, ...,
/// Q_k - t^{n_k} w_k, Q_{k+1}.
struct FamilySystem {
    VarTablePtr vars;
    std::vector<std::string> base;
    std::vector<std::string> fibers;
    std::vector<int> exponents;
    std::vector<Poly> equations;
    Poly sigma;
    int m = 0;
};

/// Sigma(z, t) over the base variables and t.
struct FamilyEquation {
    Poly Sigma;
    int m = 0;
    std::optional<Poly> sigma;
};

/// Sigma = sigma^m + sum_i a_i sigma^(m-i).
struct SigmaAdic {
    Poly sigma;
    int m = 0;
    std::vector<Poly> coeffs;
    std::size_t main_var = 0;
};

/// Base variables plus `t`, all base weights 1.
VarTablePtr base_vars(const std::vector<std::string>& base);

/// `exponents` overrides the tower's n_j when non-empty.
FamilySystem build_family(const CoveringTower& tower, const std::vector<int>& exponents = {});

FamilyEquation eliminate(const FamilySystem& system);

/// First variable in which sigma has a constant leading coefficient.
std::optional<std::size_t> sigma_main_variable(const Poly& sigma);

SigmaAdic sigma_adic(const FamilyEquation& family);
Poly reconstruct(const SigmaAdic& adic);
FamilyEquation family_from_adic(const SigmaAdic& adic);

ValidationReport check_divide(const SigmaAdic& adic);

struct SamplerOptions {
    int max_d = 3;
    int max_m = 6;
    int max_k = 2;
    int max_exponent = 2;
    int min_base = 2;
    int max_base = 3;
    int coeff_bound = 3;
};

/// Random valid tower: weighted homogeneous levels with coefficients from
/// {-b..b} \ {0} (sparsified), leading term forced monic, resampled until
/// the tower validates and passes the separability certificate.
CoveringTower sample_tower(std::mt19937_64& rng, const SamplerOptions& options = {});

}  // namespace unicover
