#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gcat/finmap.hpp"

namespace gcat {

struct OsPermPair {
    FinMap os;         // ordered surjection
    Permutation perm;

    bool operator==(const OsPermPair&) const = default;
};

/// Factors a surjection g as tau . f with f ordered surjective and tau the
/// unique permutation making splitting(g) . tau increasing (equivalently
/// f = tau^{-1} . g).  Inverse of os_perm_to_sur.  Throws std::domain_error
/// unless g is surjective.
OsPermPair sur_to_os_perm(const FinMap& g);

/// compose(sigma, f): the surjection sigma . f.
FinMap os_perm_to_sur(const FinMap& f, const Permutation& sigma);

/// splitting(f) for ordered surjective f.  Functorial against composition:
/// os_to_inj(compose(g, f)) = compose(os_to_inj(f), os_to_inj(g)).
/// Throws std::domain_error unless f is an ordered surjection.
FinMap os_to_inj(const FinMap& f);

/// The least pair (f ordered surjective, sigma) with
/// compose(os_to_inj(f), sigma) = u, when one exists.
///
/// Since splitting always sends 1 to 1, a pair exists exactly when 1 lies in
/// the image of u; injections missing 1 are not covered (see the fi-epi
/// verification suite, which documents this boundary).  Throws
/// std::invalid_argument unless u is injective.
std::optional<OsPermPair> inj_cover(const FinMap& u);

struct GammaFactorization {
    FinMap component; // increasing injection u picking out the image
    FinMap element;   // surjection s onto the image positions

    bool operator==(const GammaFactorization&) const = default;
};

/// image_factorization packaged as the component-plus-element form of the
/// coproduct decomposition of all maps into subset-indexed surjections.
GammaFactorization gamma_decompose(const FinMap& f);

/// A matrix over Z/q, entries stored row-major and reduced mod q.
class ZqMatrix {
public:
    ZqMatrix() = default;
    ZqMatrix(int rows, int cols, int q);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int modulus() const { return q_; }

    int at(int r, int c) const { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
    void set(int r, int c, int value);

    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const ZqMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0, q_ = 2;
    std::vector<int> entries_;
};

/// The module map (Z/q)[X] -> (Z/q)^r extending phi on basis elements: the
/// r-by-X matrix whose column i is phi[i].  Throws std::invalid_argument on
/// malformed phi.
ZqMatrix adjunction_to_matrix(int q, int X, int r, const std::vector<std::vector<int>>& phi);

/// Inverse: the columns of the matrix, as the underlying map X -> (Z/q)^r.
std::vector<std::vector<int>> matrix_to_adjunction(const ZqMatrix& mx);

/// One step of a chain of concretely presented functors, evaluated on the
/// objects within a bound: at each level an index map between finite sets of
/// elements.  Epi steps must be surjective and mono steps injective at every
/// evaluated level.
struct ChainStep {
    enum class Direction { epi, mono };

    struct LevelMap {
        std::size_t domain_size = 0;
        std::size_t codomain_size = 0;
        std::vector<std::size_t> map; // domain index -> codomain index
    };

    struct Violation {
        int level;
        std::size_t witness_a, witness_b; // collided pair (mono) or missed index (epi, in a)
    };

    Direction direction = Direction::epi;
    std::map<int, LevelMap> levels;

    /// Violations of the direction's requirement, per level.
    std::vector<Violation> check() const;
};

} // namespace gcat
