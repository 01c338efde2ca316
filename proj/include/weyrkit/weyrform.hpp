#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weyrkit/exactmat/matrix.hpp"
#include "weyrkit/partition.hpp"

namespace weyrkit {

struct EigenBlock {
    Rational eigenvalue;
    Partition characteristic;

    // The index of the eigenvalue equals the length of its Weyr characteristic.
    std::size_t index() const { return characteristic.length(); }
};

/// Full Weyr data of one square matrix: distinct eigenvalues with their Weyr
/// characteristics. Blocks are kept in ascending eigenvalue order.
class EigenStructure {
public:
    EigenStructure() = default;
    // Sorts blocks; throws std::invalid_argument on repeated eigenvalues or
    // empty characteristics.
    explicit EigenStructure(std::vector<EigenBlock> blocks);

    const std::vector<EigenBlock>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    std::size_t dim() const { return dim_; }

    const EigenBlock* find(const Rational& eigenvalue) const;
    // Same characteristics with every eigenvalue moved by -shift.
    EigenStructure shifted(const Rational& shift) const;

    friend bool operator==(const EigenStructure& a, const EigenStructure& b) {
        if (a.blocks_.size() != b.blocks_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
            if (a.blocks_[i].eigenvalue != b.blocks_[i].eigenvalue ||
                a.blocks_[i].characteristic != b.blocks_[i].characteristic) {
                return false;
            }
        }
        return true;
    }

private:
    std::vector<EigenBlock> blocks_;
    std::size_t dim_ = 0;
};

struct WeyrDecomposition {
    EigenStructure structure;
    Matrix weyr;     // W
    Matrix p;        // P, with P⁻¹ A P = W
    Matrix p_inv;
};

/// First differences of nullity_chain(A - λI). Throws NotAnEigenvalue when
/// nullity(A - λI) is zero.
Partition weyr_characteristic(const Matrix& a, const Rational& lambda);

/// Distinct eigenvalues ascending with their Weyr characteristics. Throws
/// IrrationalSpectrum when the characteristic polynomial does not split over
/// the rationals.
EigenStructure eigen_structure(const Matrix& a);

/// N_γ: block upper bidiagonal with superdiagonal blocks (I; 0) of shape
/// γ_i x γ_{i+1}.
Matrix nilpotent_weyr(const Partition& gamma);

// ⊕ (λ_i I + N_{α_i}) in block order.
Matrix weyr_matrix(const EigenStructure& s);

/// Builds P from a Weyr-adapted basis: per eigenvalue, stage k = q down to 1
/// takes the images under (A - λI) of stage k+1 and completes them, in
/// canonical nullspace order, to a basis of ker (A-λI)^k modulo
/// ker (A-λI)^(k-1). P⁻¹AP = W is checked exactly before returning.
WeyrDecomposition weyr_transform(const Matrix& a);

// Same, but with a structure the caller already has (and has verified).
WeyrDecomposition weyr_transform(const Matrix& a, const EigenStructure& s);

/// Recomputes the Weyr characteristic of `a` at every declared eigenvalue and
/// checks the weights sum to the dimension. Returns a description of the
/// first mismatch, or nullopt when the declaration is correct.
std::optional<std::string> check_declared_structure(const Matrix& a, const EigenStructure& s);

}  // namespace weyrkit
