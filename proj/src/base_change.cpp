#include "gcat/base_change.hpp"

#include <algorithm>
#include <numeric>

namespace gcat {

OsPermPair sur_to_os_perm(const FinMap& g) {
    if (!is_surjective(g)) throw std::domain_error("sur_to_os_perm: map is not surjective");
    FinMap section = splitting(g);
    int n = g.codomain_size();
    // tau sorts the preimage minima ascending: section . tau is increasing.
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 1);
    std::sort(tau.begin(), tau.end(), [&](int a, int b) { return section(a) < section(b); });
    Permutation perm{std::move(tau)};
    FinMap ordered = compose(perm.inverse().as_finmap(), g);
    return {std::move(ordered), std::move(perm)};
}

FinMap os_perm_to_sur(const FinMap& f, const Permutation& sigma) {
    return compose(sigma.as_finmap(), f);
}

FinMap os_to_inj(const FinMap& f) {
    if (!is_ordered_surjection(f)) throw std::domain_error("os_to_inj: map is not an ordered surjection");
    return splitting(f);
}

std::optional<OsPermPair> inj_cover(const FinMap& u) {
    if (!is_injective(u)) throw std::domain_error("inj_cover: map is not injective");
    int n = u.domain_size();
    int m = u.codomain_size();
    if (n < 1 || m < n) throw std::domain_error("inj_cover: need m >= n >= 1");

    // The section of an ordered surjection is the increasing enumeration of
    // the preimage minima and always starts at 1, so both the section and
    // sigma are forced by u; only the non-minima values of f are free, and
    // value 1 is the least legal choice at every free position.
    std::vector<int> image(u.values());
    std::sort(image.begin(), image.end());
    if (image.front() != 1) return std::nullopt;

    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        auto it = std::lower_bound(image.begin(), image.end(), u(i));
        sigma[static_cast<std::size_t>(i - 1)] = static_cast<int>(it - image.begin()) + 1;
    }

    std::vector<int> f(static_cast<std::size_t>(m), 1);
    for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(image[static_cast<std::size_t>(i)] - 1)] = i + 1;
    return OsPermPair{FinMap(std::move(f), n), Permutation(std::move(sigma))};
}

GammaFactorization gamma_decompose(const FinMap& f) {
    ImageFactorization fac = image_factorization(f);
    return {std::move(fac.injection), std::move(fac.surjection)};
}

ZqMatrix::ZqMatrix(int rows, int cols, int q) : rows_(rows), cols_(cols), q_(q) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ZqMatrix: negative shape");
    if (q < 2) throw std::invalid_argument("ZqMatrix: modulus must be >= 2");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

void ZqMatrix::set(int r, int c, int value) {
    int v = value % q_;
    if (v < 0) v += q_;
    entries_[static_cast<std::size_t>(r * cols_ + c)] = v;
}

ZqMatrix adjunction_to_matrix(int q, int X, int r, const std::vector<std::vector<int>>& phi) {
    if (static_cast<int>(phi.size()) != X)
        throw std::invalid_argument("adjunction_to_matrix: phi must have X entries");
    ZqMatrix mx(r, X, q);
    for (int col = 0; col < X; ++col) {
        if (static_cast<int>(phi[static_cast<std::size_t>(col)].size()) != r)
            throw std::invalid_argument("adjunction_to_matrix: phi entries must be r-vectors");
        for (int row = 0; row < r; ++row)
            mx.set(row, col, phi[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)]);
    }
    return mx;
}

std::vector<std::vector<int>> matrix_to_adjunction(const ZqMatrix& mx) {
    std::vector<std::vector<int>> phi(static_cast<std::size_t>(mx.cols()),
                                      std::vector<int>(static_cast<std::size_t>(mx.rows())));
    for (int col = 0; col < mx.cols(); ++col)
        for (int row = 0; row < mx.rows(); ++row)
            phi[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)] = mx.at(row, col);
    return phi;
}

std::vector<ChainStep::Violation> ChainStep::check() const {
    std::vector<Violation> violations;
    for (const auto& [level, lm] : levels) {
        if (direction == Direction::mono) {
            std::map<std::size_t, std::size_t> seen;
            for (std::size_t i = 0; i < lm.map.size(); ++i) {
                auto [it, inserted] = seen.try_emplace(lm.map[i], i);
                if (!inserted) violations.push_back({level, it->second, i});
            }
        } else {
            std::vector<char> hit(lm.codomain_size, 0);
            for (std::size_t target : lm.map)
                if (target < lm.codomain_size) hit[target] = 1;
            for (std::size_t i = 0; i < lm.codomain_size; ++i)
                if (!hit[i]) violations.push_back({level, i, i});
        }
    }
    return violations;
}

} // namespace gcat
