#include "st34/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace st34 {

namespace {

using Key = std::array<long, 12>;

Key key_of(const EisVec6& v)
{
    Key k{};
    for (std::size_t i = 0; i < 6; ++i) {
        k[2 * i] = v[i].re;
        k[2 * i + 1] = v[i].w;
    }
    return k;
}

EisInt omega_pow(long a)
{
    return unit_pow(EisInt::omega(), a);
}

const EisInt kTheta = EisInt::theta();

/// Exponent a with x = w^a, or -1 if x is not a power of w.
int omega_exponent(const EisInt& x)
{
    for (int a = 0; a < 3; ++a) {
        if (x == omega_pow(a)) {
            return a;
        }
    }
    return -1;
}

}  // namespace

std::string to_string(const EisInt& x)
{
    std::string out = std::to_string(x.re);
    out += x.w < 0 ? "-" + std::to_string(-x.w) : "+" + std::to_string(x.w);
    return out + "*w";
}

std::string to_string(const EisVec6& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < 6; ++i) {
        out += (i != 0 ? ", " : "") + to_string(v[i]);
    }
    return out + ")";
}

std::string to_string(Family f)
{
    return f == Family::theta_pair ? "theta_pair" : "omega_power";
}

std::string to_string(HyperplaneType t)
{
    switch (t) {
    case HyperplaneType::pair: return "x_i-w^a*x_j";
    case HyperplaneType::four_one_one: return "x1+x2+x3+x4+w*x5+w^2*x6";
    case HyperplaneType::three_three: return "x1+x2+x3+w*(x4+x5+x6)";
    case HyperplaneType::two_two_two: return "x1+x2+w*(x3+x4)+w^2*(x5+x6)";
    case HyperplaneType::all_ones: return "x1+x2+x3+x4+x5+x6";
    }
    return "?";
}

long hermitian_norm(const EisVec6& v)
{
    long n = 0;
    for (const auto& x : v) {
        n += x.norm();
    }
    return n;
}

EisVec6 scale(const EisInt& u, const EisVec6& v)
{
    EisVec6 out;
    for (std::size_t i = 0; i < 6; ++i) {
        out[i] = u * v[i];
    }
    return out;
}

EisInt exact_divide(const EisInt& a, const EisInt& b)
{
    const long n = b.norm();
    if (n == 0) {
        throw ArithmeticError("division by zero in Z[w]");
    }
    const EisInt t = a * b.conj();
    if (t.re % n != 0 || t.w % n != 0) {
        throw ArithmeticError("inexact division in Z[w]");
    }
    return EisInt(t.re / n, t.w / n);
}

std::vector<MinimalVector> enumerate_minimal_vectors()
{
    std::vector<MinimalVector> out;
    out.reserve(756);
    for (const long sign : {1L, -1L}) {
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = i + 1; j < 6; ++j) {
                for (long a = 0; a < 3; ++a) {
                    for (long b = 0; b < 3; ++b) {
                        EisVec6 v{};
                        v[i] = EisInt(sign) * omega_pow(a) * kTheta;
                        v[j] = EisInt(-sign) * omega_pow(b) * kTheta;
                        out.push_back({v, Family::theta_pair});
                    }
                }
            }
        }
        for (int code = 0; code < 729; ++code) {
            std::array<long, 6> e{};
            int c = code;
            for (auto& x : e) {
                x = c % 3;
                c /= 3;
            }
            if (std::accumulate(e.begin(), e.end(), 0L) % 3 != 0) {
                continue;
            }
            EisVec6 v{};
            for (std::size_t k = 0; k < 6; ++k) {
                v[k] = EisInt(sign) * omega_pow(e[k]);
            }
            out.push_back({v, Family::omega_power});
        }
    }
    std::sort(out.begin(), out.end(), [](const MinimalVector& x, const MinimalVector& y) {
        if (x.family != y.family) {
            return x.family < y.family;
        }
        return to_string(x.coords) < to_string(y.coords);
    });
    return out;
}

const std::vector<MinimalVector>& minimal_vectors()
{
    static const std::vector<MinimalVector> vectors = enumerate_minimal_vectors();
    return vectors;
}

EisVec6 canonical_form(const EisVec6& form)
{
    for (const auto& x : form) {
        if (!x.is_zero()) {
            EisVec6 out;
            for (std::size_t i = 0; i < 6; ++i) {
                out[i] = exact_divide(form[i], x);
            }
            return out;
        }
    }
    throw std::invalid_argument("zero linear form");
}

HyperplaneType classify_form(const EisVec6& f)
{
    const auto nonzero = std::count_if(f.begin(), f.end(), [](const EisInt& x) { return !x.is_zero(); });
    if (nonzero == 2) {
        const auto lead = std::find_if(f.begin(), f.end(), [](const EisInt& x) { return !x.is_zero(); });
        const auto second = std::find_if(lead + 1, f.end(), [](const EisInt& x) { return !x.is_zero(); });
        if (*lead == EisInt(1L) && omega_exponent(-*second) >= 0) {
            return HyperplaneType::pair;
        }
        throw std::invalid_argument("two-term form is not x_i - w^a x_j: " + to_string(f));
    }
    if (nonzero == 6) {
        std::array<int, 3> counts{};
        for (const auto& x : f) {
            const int a = omega_exponent(x);
            if (a < 0) {
                throw std::invalid_argument("coefficient is not a power of w: " + to_string(f));
            }
            ++counts[static_cast<std::size_t>(a)];
        }
        std::sort(counts.begin(), counts.end(), std::greater<>());
        if (counts == std::array<int, 3>{6, 0, 0}) {
            return HyperplaneType::all_ones;
        }
        if (counts == std::array<int, 3>{4, 1, 1}) {
            return HyperplaneType::four_one_one;
        }
        if (counts == std::array<int, 3>{3, 3, 0}) {
            return HyperplaneType::three_three;
        }
        if (counts == std::array<int, 3>{2, 2, 2}) {
            return HyperplaneType::two_two_two;
        }
    }
    throw std::invalid_argument("not a reflecting hyperplane of the census: " + to_string(f));
}

std::vector<Hyperplane> enumerate_hyperplanes()
{
    const EisInt w = EisInt::omega();
    const EisInt w2 = w * w;
    const EisInt one(1L);
    const EisInt zero(0L);
    // the pair type carries its own parameter a in x_i - w^a x_j
    const std::array<std::pair<HyperplaneType, EisVec6>, 7> typical = {{
        {HyperplaneType::pair, {one, -one, zero, zero, zero, zero}},
        {HyperplaneType::pair, {one, -w, zero, zero, zero, zero}},
        {HyperplaneType::pair, {one, -w2, zero, zero, zero, zero}},
        {HyperplaneType::four_one_one, {one, one, one, one, w, w2}},
        {HyperplaneType::three_three, {one, one, one, w, w, w}},
        {HyperplaneType::two_two_two, {one, one, w, w, w2, w2}},
        {HyperplaneType::all_ones, {one, one, one, one, one, one}},
    }};
    std::vector<Hyperplane> out;
    std::map<Key, HyperplaneType> seen;
    for (const auto& [type, form] : typical) {
        std::array<std::size_t, 6> perm = {0, 1, 2, 3, 4, 5};
        do {
            EisVec6 g;
            for (std::size_t i = 0; i < 6; ++i) {
                g[perm[i]] = form[i];
            }
            const EisVec6 canon = canonical_form(g);
            const auto [it, inserted] = seen.emplace(key_of(canon), type);
            if (inserted) {
                out.push_back({canon, type});
            } else if (it->second != type) {
                throw std::logic_error("hyperplane appears in two census types: " + to_string(canon));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::stable_sort(out.begin(), out.end(), [](const Hyperplane& a, const Hyperplane& b) {
        if (a.type != b.type) {
            return a.type < b.type;
        }
        return to_string(a.form) < to_string(b.form);
    });
    return out;
}

Hyperplane vector_to_hyperplane(const MinimalVector& v)
{
    const EisVec6 canon = canonical_form(v.coords);
    return {canon, classify_form(canon)};
}

LatticeCensus lattice_census()
{
    LatticeCensus c;
    const auto& vecs = minimal_vectors();
    std::set<Key> vec_set;
    std::set<long> norms;
    for (const auto& v : vecs) {
        (v.family == Family::theta_pair ? c.theta_pair : c.omega_power) += 1;
        vec_set.insert(key_of(v.coords));
        norms.insert(hermitian_norm(v.coords));
    }
    c.total = vec_set.size();
    c.norms.assign(norms.begin(), norms.end());
    c.closed_under_units = true;
    for (const auto& v : vecs) {
        for (int k = 0; k < 6; ++k) {
            if (vec_set.count(key_of(scale(unit<long>(k), v.coords))) == 0) {
                c.closed_under_units = false;
            }
        }
    }

    const auto planes = enumerate_hyperplanes();
    c.hyperplanes = planes.size();
    std::map<Key, HyperplaneType> census_type;
    for (const auto& h : planes) {
        ++c.hyperplanes_by_type[h.type];
        census_type.emplace(key_of(h.form), h.type);
    }

    std::map<Key, std::size_t> fibers;
    c.types_agree = true;
    for (const auto& v : vecs) {
        const Hyperplane h = vector_to_hyperplane(v);
        ++fibers[key_of(h.form)];
        const auto it = census_type.find(key_of(h.form));
        if (it == census_type.end() || it->second != h.type) {
            c.types_agree = false;
        }
    }
    for (const auto& [k, n] : fibers) {
        ++c.fiber_histogram[n];
    }
    c.image_is_hyperplane_set = fibers.size() == census_type.size() &&
                                std::all_of(fibers.begin(), fibers.end(),
                                            [&](const auto& f) { return census_type.count(f.first) == 1; });
    return c;
}

}  // namespace st34
