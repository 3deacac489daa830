#include "spets/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "spets/numeric.hpp"

namespace spets {

namespace {

// Shifted-part set of a partition: {part[j] + j} over stored parts (weakly
// increasing); strictly increasing, so a set.
std::vector<long long> shifted_parts(const Partition& p) {
    std::vector<long long> a;
    a.reserve(p.parts().size());
    for (size_t j = 0; j < p.parts().size(); ++j)
        a.push_back(checked_add(p.parts()[j], static_cast<long long>(j)));
    return a;
}

// Sum over pairs b < a in A of the smaller element b.
long long sum_of_smaller_over_pairs(const std::vector<long long>& a) {
    long long s = 0;
    for (size_t j = 0; j < a.size(); ++j)
        s = checked_add(s, checked_mul(a[j], static_cast<long long>(a.size() - 1 - j)));
    return s;
}

// c(A) for a k-element shifted-part set: sum_{l=0}^{k-1} C(l,2).
long long c_correction(size_t k) {
    long long s = 0;
    for (size_t l = 0; l < k; ++l) s = checked_add(s, binomial(static_cast<long long>(l), 2));
    return s;
}

// prod_{b<a in A} (X^{qa} - X^{qb})
Poly delta_poly(const std::vector<long long>& a, long long q) {
    Poly r = Poly::one();
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            r *= Poly::monomial(1, checked_mul(q, a[i])) - Poly::monomial(1, checked_mul(q, a[j]));
    return r;
}

// prod_{a in A} prod_{l=1}^{a} (X^{ql} - 1)
Poly theta_poly(const std::vector<long long>& a, long long q) {
    Poly r = Poly::one();
    for (long long v : a)
        for (long long l = 1; l <= v; ++l) r *= Poly::x_power_minus_one(checked_mul(q, l));
    return r;
}

// sum_i i * |component (i + j*d) mod q| for each rotation power j.
std::vector<long long> rotation_exponents(const Multipartition& lift, long long d, long long e) {
    long long q = d * e;
    std::vector<long long> t(static_cast<size_t>(e), 0);
    for (long long j = 0; j < e; ++j) {
        long long s = 0;
        for (long long i = 0; i < q; ++i) {
            long long idx = (i + j * d) % q;
            s = checked_add(s, checked_mul(i, lift.component(static_cast<int>(idx)).sum()));
        }
        t[static_cast<size_t>(j)] = s;
    }
    return t;
}

void validate_lift(const Multipartition& lift, const GroupSpec& g) {
    if (lift.count() != g.q())
        throw std::domain_error("multipartition has " + std::to_string(lift.count()) +
                                " components; expected " + std::to_string(g.q()));
    if (lift.total() != g.n)
        throw std::domain_error("multipartition of " + std::to_string(lift.total()) +
                                " does not label a representation of " + g.str());
}

// Pads the partition with leading zero parts to exactly `parts` parts.
std::vector<long long> padded_parts(const Partition& p, long long parts) {
    if (static_cast<long long>(p.parts().size()) > parts)
        throw std::domain_error("partition has more parts than the requested padding");
    std::vector<long long> out(static_cast<size_t>(parts), 0);
    std::copy(p.parts().begin(), p.parts().end(),
              out.begin() + (parts - static_cast<long long>(p.parts().size())));
    return out;
}

std::vector<long long> shifted_padded(const Partition& p, long long parts) {
    std::vector<long long> out = padded_parts(p, parts);
    for (size_t j = 0; j < out.size(); ++j)
        out[j] = checked_add(out[j], static_cast<long long>(j));
    return out;
}

long long vec_sum(const std::vector<long long>& v) {
    long long s = 0;
    for (long long x : v) s = checked_add(s, x);
    return s;
}

}  // namespace

std::string IrrepLabel::str() const {
    std::string s = orbit.rep.str();
    if (orbit.stabilizer > 1) s += "#" + std::to_string(component);
    return s;
}

std::vector<IrrepLabel> irreps(const GroupSpec& g) {
    std::vector<IrrepLabel> out;
    for (const MultipartitionOrbit& orbit : enumerate_orbits(g))
        for (long long l = 1; l <= orbit.stabilizer; ++l) out.push_back({orbit, l});
    return out;
}

long long irrep_dimension(const IrrepLabel& label, const GroupSpec& g) {
    validate_lift(label.orbit.rep, g);
    long long full = irrep_dimension(label.orbit.rep);
    if (full % label.orbit.stabilizer != 0)
        throw std::logic_error("orbit dimension not divisible by its stabilizer");
    return full / label.orbit.stabilizer;
}

Poly poincare_polynomial(const GroupSpec& g) {
    Poly p = Poly::one();
    Poly x_minus_one = Poly::x_power_minus_one(1);
    for (long long deg : g.degrees())
        p *= Poly::x_power_minus_one(deg).divided_exactly_by(x_minus_one);
    return p;
}

Poly fake_degree(const Multipartition& lift, const GroupSpec& g) {
    validate_lift(lift, g);
    if (g.n == 0) return Poly::one();
    long long q = g.q();

    Poly num = Poly::x_power_minus_one(checked_mul(g.n, g.d));
    for (long long h = 1; h < g.n; ++h) num *= Poly::x_power_minus_one(checked_mul(q, h));

    Poly theta_all = Poly::one();
    long long c_total = 0;
    for (int i = 0; i < q; ++i) {
        std::vector<long long> a = shifted_parts(lift.component(i));
        num *= delta_poly(a, q);
        theta_all *= theta_poly(a, q);
        c_total = checked_add(c_total, c_correction(a.size()));
    }

    Poly rotation_sum;
    for (long long t : rotation_exponents(lift, g.d, g.e)) rotation_sum += Poly::monomial(1, t);
    num *= rotation_sum;

    num = num.divided_exactly_by(theta_all);
    if (c_total > 0) num = num.divided_exactly_by(Poly::monomial(1, checked_mul(q, c_total)));
    return num.divided_exactly_by_scalar(lift.stabilizer_order(g.d, g.e));
}

long long b_value(const Multipartition& lift, const GroupSpec& g) {
    return b_from_content(lift, g);
}

long long b_from_content(const Multipartition& lift, const GroupSpec& g) {
    validate_lift(lift, g);
    long long q = g.q();
    long long base = 0;
    for (int i = 0; i < q; ++i) {
        std::vector<long long> a = shifted_parts(lift.component(i));
        base = checked_add(base, sum_of_smaller_over_pairs(a));
        base = checked_add(base, -c_correction(a.size()));
    }
    base = checked_mul(q, base);
    std::vector<long long> t = rotation_exponents(lift, g.d, g.e);
    return checked_add(base, *std::min_element(t.begin(), t.end()));
}

long long b_from_content_type_b(const Multipartition& mp, long long e) {
    GroupSpec g = GroupSpec::make(e, 1, mp.total());
    validate_lift(mp, g);
    long long k = 0;
    for (int i = 0; i < mp.count(); ++i) {
        long long len = static_cast<long long>(mp.component(i).length());
        k = std::max(k, i == 0 ? len - 1 : len);
    }
    long long b = 0;
    for (int i = 0; i < mp.count(); ++i) {
        std::vector<long long> a = shifted_padded(mp.component(i), i == 0 ? k + 1 : k);
        b = checked_add(b, checked_mul(e, sum_of_smaller_over_pairs(a)));
        b = checked_add(b, checked_mul(static_cast<long long>(i), vec_sum(a)));
    }
    for (long long l = 0; l < k; ++l)
        b = checked_add(b, -binomial(checked_add(checked_mul(e, l), 1), 2));
    return b;
}

long long b_from_content_type_d(const Multipartition& lift, long long e) {
    GroupSpec g = GroupSpec::make(1, e, lift.total());
    validate_lift(lift, g);
    long long k = 0;
    for (int i = 0; i < lift.count(); ++i)
        k = std::max(k, static_cast<long long>(lift.component(i).length()));
    std::vector<std::vector<long long>> a(static_cast<size_t>(e));
    long long b = 0;
    for (long long i = 0; i < e; ++i) {
        a[static_cast<size_t>(i)] = shifted_padded(lift.component(static_cast<int>(i)), k);
        b = checked_add(b, checked_mul(e, sum_of_smaller_over_pairs(a[static_cast<size_t>(i)])));
    }
    long long best = 0;
    for (long long j = 0; j < e; ++j) {
        long long t = 0;
        for (long long i = 0; i < e; ++i)
            t = checked_add(t, checked_mul(i, vec_sum(a[static_cast<size_t>((i + j) % e)])));
        if (j == 0 || t < best) best = t;
    }
    b = checked_add(b, best);
    for (long long l = 0; l < k; ++l) b = checked_add(b, -binomial(checked_mul(e, l), 2));
    return b;
}

bool has_a_function(const GroupSpec& g) { return g.e == 1 || g.d == 1; }

Symbol classifying_symbol(const Multipartition& lift, const GroupSpec& g) {
    validate_lift(lift, g);
    if (g.e == 1) return Symbol(lift, g, SymbolType{1, 0}, Weight::basic(g.q()));
    if (g.d == 1) return Symbol(lift, g, SymbolType{1, 0}, Weight::zero(g.q()));
    throw std::domain_error("no classifying symbol for " + g.str() +
                            ": the a-function is defined for G(q,1,n) and G(e,e,n) only");
}

long long a_value(const Multipartition& lift, const GroupSpec& g) {
    return classifying_symbol(lift, g).a_stat();
}

bool is_special(const Multipartition& lift, const GroupSpec& g) {
    return classifying_symbol(lift, g).distinguished();
}

bool check_spetsial(const GroupSpec& g) {
    for (const MultipartitionOrbit& orbit : enumerate_orbits(g))
        if (a_value(orbit.rep, g) > b_value(orbit.rep, g)) return false;
    return true;
}

std::vector<Family> families(const GroupSpec& g) {
    if (!has_a_function(g))
        throw std::domain_error("families implemented for G(q,1,n) and G(e,e,n) only; got " +
                                g.str());
    std::vector<MultipartitionOrbit> orbits = enumerate_orbits(g);

    std::vector<Family> singletons;
    std::vector<MultipartitionOrbit> by_symbol;
    for (const MultipartitionOrbit& orbit : orbits) {
        bool stuttering = g.e > 1 && orbit.stabilizer == g.e;
        if (stuttering) {
            for (long long l = 1; l <= orbit.stabilizer; ++l)
                singletons.push_back(Family{{IrrepLabel{orbit, l}}});
        } else {
            by_symbol.push_back(orbit);
        }
    }

    // Group the remaining orbits by similarity of their classifying symbols,
    // with all symbols re-shifted to one common shape.
    std::vector<Symbol> symbols;
    long long global_depth = 0;
    for (const MultipartitionOrbit& orbit : by_symbol) {
        symbols.push_back(classifying_symbol(orbit.rep, g));
        const Symbol& s = symbols.back();
        long long own = minimal_shape(orbit.rep, g, s.weight())[0] - s.weight().entries()[0];
        global_depth = std::max(global_depth, own);
    }
    std::map<std::vector<long long>, Family> classes;
    for (size_t idx = 0; idx < by_symbol.size(); ++idx) {
        const Symbol& s = symbols[idx];
        long long own = minimal_shape(by_symbol[idx].rep, g, s.weight())[0] -
                        s.weight().entries()[0];
        std::vector<long long> key = similarity_key(s, global_depth - own);
        Family& fam = classes[key];
        for (long long l = 1; l <= by_symbol[idx].stabilizer; ++l)
            fam.members.push_back(IrrepLabel{by_symbol[idx], l});
    }

    std::vector<Family> out;
    out.reserve(classes.size() + singletons.size());
    for (auto& [key, fam] : classes) {
        std::sort(fam.members.begin(), fam.members.end());
        out.push_back(std::move(fam));
    }
    out.insert(out.end(), singletons.begin(), singletons.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IrrepLabel> special_irreps(const GroupSpec& g) {
    std::vector<IrrepLabel> out;
    for (const MultipartitionOrbit& orbit : enumerate_orbits(g))
        if (is_special(orbit.rep, g))
            for (long long l = 1; l <= orbit.stabilizer; ++l) out.push_back({orbit, l});
    return out;
}

}  // namespace spets
