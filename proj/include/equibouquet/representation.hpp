#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equibouquet/linalg.hpp"
#include "equibouquet/symgroup.hpp"

namespace equibouquet {

/// Orthogonal representation of Sym(B_g) on R^m, stored by generator images:
/// the g circle reversals ρ_i and the g−1 adjacent transpositions τ_(k k+1).
/// Every other matrix is produced from these through the normal form
/// h = τ_σ ∘ Π ρ_i^{s_i} and a reduced adjacent-transposition word for σ.
class Representation {
public:
    Representation() = default;

    Representation(int genus, int dim, std::vector<Matrix> rho, std::vector<Matrix> tau_adjacent)
        : genus_(genus), dim_(dim), rho_(std::move(rho)), tau_adjacent_(std::move(tau_adjacent)) {
        if (genus_ < 1) throw DomainError("representation genus must be positive");
        if (static_cast<int>(rho_.size()) != genus_) throw DimensionError("need one ρ matrix per circle");
        if (static_cast<int>(tau_adjacent_.size()) != genus_ - 1) {
            throw DimensionError("need g-1 adjacent transposition matrices");
        }
        for (const auto* family : {&rho_, &tau_adjacent_}) {
            for (const Matrix& m : *family) {
                if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("generator matrix has wrong shape");
            }
        }
    }

    int genus() const { return genus_; }
    int dim() const { return dim_; }
    const std::vector<Matrix>& rho() const { return rho_; }
    const std::vector<Matrix>& tau_adjacent() const { return tau_adjacent_; }
    std::vector<Matrix>& rho() { return rho_; }
    std::vector<Matrix>& tau_adjacent() { return tau_adjacent_; }

    Matrix tau_of(const Permutation& sigma) const {
        if (sigma.size() != genus_) throw DimensionError("tau_of: permutation size differs from genus");
        Matrix out = Matrix::Identity(dim_, dim_);
        for (int k : sigma.adjacent_word()) out = out * tau_adjacent_[k];
        return out;
    }

    Matrix matrix_of(const GroupElement& h) const {
        if (h.genus() != genus_) throw DimensionError("matrix_of: element genus differs");
        Matrix out = tau_of(h.perm());
        for (int i = 0; i < genus_; ++i) {
            if (h.signs()[i]) out = out * rho_[i];
        }
        return out;
    }

    /// Generators with labels "rho_i" / "(i i+1)" (1-based).
    std::vector<std::pair<std::string, GroupElement>> generator_elements() const {
        std::vector<std::pair<std::string, GroupElement>> out;
        for (int i = 0; i < genus_; ++i) {
            out.emplace_back("rho_" + std::to_string(i + 1), GroupElement::rho(genus_, i));
        }
        for (int k = 0; k + 1 < genus_; ++k) {
            out.emplace_back(transposition_label(k),
                             GroupElement::tau(Permutation::transposition(genus_, k, k + 1)));
        }
        return out;
    }

    /// Stored generator matrices in the same order as generator_elements().
    std::vector<std::pair<std::string, Matrix>> generator_matrices() const {
        std::vector<std::pair<std::string, Matrix>> out;
        for (int i = 0; i < genus_; ++i) out.emplace_back("rho_" + std::to_string(i + 1), rho_[i]);
        for (int k = 0; k + 1 < genus_; ++k) out.emplace_back(transposition_label(k), tau_adjacent_[k]);
        return out;
    }

    /// A·M·Aᵀ for every generator.
    Representation conjugated(const Matrix& a) const {
        if (a.rows() != dim_ || a.cols() != dim_) throw DimensionError("conjugated: wrong matrix shape");
        auto map = [&](const std::vector<Matrix>& ms) {
            std::vector<Matrix> out;
            for (const Matrix& m : ms) out.emplace_back(a * m * a.transpose());
            return out;
        };
        return {genus_, dim_, map(rho_), map(tau_adjacent_)};
    }

    /// blockdiag(M, 1) for every generator.
    Representation extended_by_fixed_axis() const {
        auto map = [](const std::vector<Matrix>& ms) {
            std::vector<Matrix> out;
            for (const Matrix& m : ms) out.emplace_back(block_diag(m, Matrix::Identity(1, 1)));
            return out;
        };
        return {genus_, dim_ + 1, map(rho_), map(tau_adjacent_)};
    }

    static std::string transposition_label(int k) {
        return "(" + std::to_string(k + 1) + " " + std::to_string(k + 2) + ")";
    }

private:
    int genus_ = 0;
    int dim_ = 0;
    std::vector<Matrix> rho_;
    std::vector<Matrix> tau_adjacent_;
};

}  // namespace equibouquet
