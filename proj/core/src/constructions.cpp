#include "retrieval/constructions.hpp"

#include <random>
#include <sstream>

namespace retrieval {

CodeSpec make_identity(std::size_t k, std::size_t s1) {
    Mat m(Field(2), k, k);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
    return CodeSpec(std::move(m), s1);
}

namespace {

bool columns_independent(const Mat& m, const std::vector<std::size_t>& idx) {
    IncrementalBasis basis(m.field(), m.rows());
    for (std::size_t j : idx)
        if (!basis.insert(m.column(j))) return false;
    return true;
}

void verify_mds(const Mat& m) {
    const std::size_t s = m.rows(), n = m.cols();
    std::vector<std::size_t> idx(s);
    if (n <= 14) {
        // all C(n, s) minors
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            if (!columns_independent(m, idx))
                throw std::logic_error("MDS construction failed minor check");
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    } else {
        std::mt19937_64 rng(0x4d44535f636864ull);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::size_t> all(n);
            for (std::size_t j = 0; j < n; ++j) all[j] = j;
            for (std::size_t j = 0; j < s; ++j) {
                std::uniform_int_distribution<std::size_t> d(j, n - 1);
                std::swap(all[j], all[d(rng)]);
            }
            idx.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(s));
            if (!columns_independent(m, idx))
                throw std::logic_error("MDS construction failed minor check");
        }
    }
}

}  // namespace

Mat make_mds_generator(std::size_t s, std::size_t m, std::uint64_t q) {
    if (s < 1 || s > m) throw BadAllocationError("need 1 <= s <= m");
    if (m > q)
        throw FieldTooSmallError("MDS block of length " + std::to_string(m) +
                                 " needs q >= m, got q = " + std::to_string(q));
    const Field f(q);
    Mat vand(f, s, m);
    for (std::size_t j = 0; j < m; ++j) {
        Elem p = 1;
        const Elem x = static_cast<Elem>(j);
        for (std::size_t i = 0; i < s; ++i) {
            vand.at(i, j) = p;
            p = f.mul(p, x);
        }
    }
    Mat sys = rref(vand);
    verify_mds(sys);
    return sys;
}

CodeSpec make_dedicated(std::size_t n1, std::size_t n2, std::size_t s1,
                        std::size_t s2) {
    if (n1 < s1 || n2 < s2 || s1 < 1 || s2 < 1)
        throw BadAllocationError("dedicated allocation needs n_i >= s_i >= 1");
    const std::uint64_t q = next_prime_at_least(std::max({n1, n2, std::size_t{2}}));
    const Mat g1 = make_mds_generator(s1, n1, q);
    const Mat g2 = make_mds_generator(s2, n2, q);
    Mat g(Field(q), s1 + s2, n1 + n2);
    for (std::size_t i = 0; i < s1; ++i)
        for (std::size_t j = 0; j < n1; ++j) g.at(i, j) = g1.at(i, j);
    for (std::size_t i = 0; i < s2; ++i)
        for (std::size_t j = 0; j < n2; ++j) g.at(s1 + i, n1 + j) = g2.at(i, j);
    return CodeSpec(std::move(g), s1);
}

CodeSpec make_global_mds(std::size_t n, std::size_t k, std::size_t s1) {
    const std::uint64_t q = next_prime_at_least(std::max(n, std::size_t{2}));
    return CodeSpec(make_mds_generator(k, n, q), s1);
}

CodeSpec make_hybrid_cycle(std::size_t k, std::size_t s1) {
    if (k < 3) throw BadPartitionError("cycle code needs k >= 3");
    Mat g(Field(2), k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        g.at(i, i) = 1;
        g.at(i, k + i) = 1;
        g.at((i + 1) % k, k + i) = 1;
    }
    return CodeSpec(std::move(g), s1);
}

CodeSpec repeat_code(const CodeSpec& code, std::size_t m) {
    if (m < 1) throw BadAllocationError("repeat count must be >= 1");
    const Mat& g = code.matrix();
    Mat r(code.field(), g.rows(), g.cols() * m);
    for (std::size_t copy = 0; copy < m; ++copy)
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                r.at(i, copy * g.cols() + j) = g.at(i, j);
    return CodeSpec(std::move(r), code.partition().s1);
}

CodeSpec concat_codes(const CodeSpec& a, const CodeSpec& b) {
    if (a.k() != b.k() || !(a.field() == b.field()) ||
        a.partition().s1 != b.partition().s1)
        throw MismatchError("codes differ in k, field, or partition");
    const Mat& ga = a.matrix();
    const Mat& gb = b.matrix();
    Mat g(a.field(), a.k(), ga.cols() + gb.cols());
    for (std::size_t i = 0; i < a.k(); ++i) {
        for (std::size_t j = 0; j < ga.cols(); ++j) g.at(i, j) = ga.at(i, j);
        for (std::size_t j = 0; j < gb.cols(); ++j)
            g.at(i, ga.cols() + j) = gb.at(i, j);
    }
    return CodeSpec(std::move(g), a.partition().s1);
}

std::string format_family_tag(const FamilyTag& tag) {
    std::ostringstream out;
    out << tag.family;
    for (const auto& [key, value] : tag.params) out << " " << key << "=" << value;
    return out.str();
}

std::optional<FamilyTag> parse_family_tag(const std::string& text) {
    std::istringstream in(text);
    FamilyTag tag;
    if (!(in >> tag.family)) return std::nullopt;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) return std::nullopt;
        try {
            tag.params[token.substr(0, eq)] = std::stoull(token.substr(eq + 1));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return tag;
}

FamilyTag identity_tag(std::size_t k, std::size_t s1) {
    return FamilyTag{"identity", {{"k", k}, {"s1", s1}}};
}

FamilyTag dedicated_tag(std::size_t n1, std::size_t n2, std::size_t s1,
                        std::size_t s2) {
    return FamilyTag{"dedicated", {{"n1", n1}, {"n2", n2}, {"s1", s1}, {"s2", s2}}};
}

FamilyTag global_mds_tag(std::size_t n, std::size_t k, std::size_t s1) {
    return FamilyTag{"global_mds", {{"n", n}, {"k", k}, {"s1", s1}}};
}

FamilyTag hybrid_cycle_tag(std::size_t k, std::size_t s1) {
    return FamilyTag{"hybrid_cycle", {{"k", k}, {"s1", s1}}};
}

std::optional<RetrievalPair> closed_pair_from_tag(const FamilyTag& tag,
                                                  std::size_t k,
                                                  std::size_t s1) {
    const std::size_t s2 = k - s1;
    auto param = [&](const char* name) -> std::optional<std::uint64_t> {
        const auto it = tag.params.find(name);
        if (it == tag.params.end()) return std::nullopt;
        return it->second;
    };
    if (tag.family == "identity") {
        return RetrievalPair{closed_identity_E(k, s1), closed_identity_E(k, s2)};
    }
    if (tag.family == "global_mds") {
        const auto n = param("n");
        if (!n) return std::nullopt;
        return RetrievalPair{closed_global_mds_E(*n, k, s1),
                             closed_global_mds_E(*n, k, s2)};
    }
    if (tag.family == "dedicated") {
        const auto n1 = param("n1"), n2 = param("n2");
        const auto ts1 = param("s1");
        if (!n1 || !n2 || !ts1 || *ts1 != s1) return std::nullopt;
        const std::size_t n = *n1 + *n2;
        return RetrievalPair{closed_dedicated_E(n, *n1, s1),
                             closed_dedicated_E(n, *n2, s2)};
    }
    return std::nullopt;
}

}  // namespace retrieval
