#include "zdchroma/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zdchroma {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    for (uint64_t d = 7; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 4) == 0) return false;
    }
    return true;
}

namespace {

uint64_t checked_pow(uint64_t base, uint32_t exp, const char* what) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            throw RingError(ErrorCode::resource_limit, std::string(what) + ": overflow");
        r *= base;
    }
    return r;
}

// --- polynomial helpers over Z_p, coefficients stored low degree first ---

void poly_trim(std::vector<uint32_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of f by monic g (deg g >= 1), both mod p
std::vector<uint32_t> poly_mod(std::vector<uint32_t> f, const std::vector<uint32_t>& g, uint32_t p) {
    poly_trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        uint32_t lead = f.back();
        std::size_t shift = f.size() - 1 - dg;
        if (lead != 0) {
            for (std::size_t j = 0; j <= dg; ++j) {
                uint64_t sub = static_cast<uint64_t>(lead) * g[j] % p;
                uint64_t cur = f[shift + j];
                f[shift + j] = static_cast<uint32_t>((cur + p - sub) % p);
            }
        }
        f.pop_back();
        poly_trim(f);
        if (f.empty()) break;
    }
    return f;
}

bool poly_is_irreducible(const std::vector<uint32_t>& low, uint32_t p) {
    const std::size_t k = low.size();
    if (k == 1) return true;
    std::vector<uint32_t> f(low);
    f.push_back(1); // monic
    // trial division by every monic polynomial of degree 1..k/2
    for (std::size_t d = 1; 2 * d <= k; ++d) {
        std::vector<uint32_t> g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (poly_mod(f, g, p).empty()) return false;
            // odometer over g[0..d-1]
            std::size_t i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

} // namespace

std::vector<uint32_t> irreducible_poly(uint32_t p, uint32_t k) {
    if (!is_prime(p))
        throw RingError(ErrorCode::invalid_input, "irreducible_poly: p must be prime");
    if (k < 1)
        throw RingError(ErrorCode::invalid_input, "irreducible_poly: degree must be >= 1");
    // enumerate coefficient vectors in lexicographic order, constant term as
    // the most significant position, so the result is reproducible
    std::vector<uint32_t> low(k, 0);
    while (true) {
        if (poly_is_irreducible(low, p)) return low;
        std::size_t i = k;
        while (i > 0 && ++low[i - 1] == p) low[--i] = 0;
        if (i == 0)
            throw RingError(ErrorCode::invalid_input, "irreducible_poly: exhausted candidates");
    }
}

std::string poly_to_string(const std::vector<uint32_t>& low_coeffs, bool monic_of_degree_k) {
    std::ostringstream os;
    bool first = true;
    auto term = [&](uint32_t c, std::size_t d) {
        if (c == 0) return;
        if (!first) os << "+";
        first = false;
        if (d == 0) { os << c; return; }
        if (c != 1) os << c;
        os << "x";
        if (d > 1) os << "^" << d;
    };
    if (monic_of_degree_k) term(1, low_coeffs.size());
    for (std::size_t d = low_coeffs.size(); d-- > 0;) term(low_coeffs[d], d);
    if (first) os << "0";
    return os.str();
}

FactorSpec FactorSpec::local(uint32_t p, uint32_t r) {
    if (!is_prime(p))
        throw RingError(ErrorCode::invalid_input, "factor Z[p^r]: p must be prime");
    if (r < 1)
        throw RingError(ErrorCode::invalid_input, "factor Z[p^r]: exponent must be >= 1");
    FactorSpec f;
    f.kind = Kind::local_z;
    f.p = p;
    f.exponent = r;
    f.order = checked_pow(p, r, "factor order");
    if (f.order > (uint64_t{1} << 32))
        throw RingError(ErrorCode::resource_limit, "factor order exceeds 2^32");
    return f;
}

FactorSpec FactorSpec::field(uint32_t p, uint32_t k) {
    if (!is_prime(p))
        throw RingError(ErrorCode::invalid_input, "factor GF(p^k): p must be prime");
    if (k < 1)
        throw RingError(ErrorCode::invalid_input, "factor GF(p^k): degree must be >= 1");
    FactorSpec f;
    f.kind = Kind::galois_field;
    f.p = p;
    f.exponent = k;
    f.order = checked_pow(p, k, "factor order");
    if (f.order > (uint64_t{1} << 32))
        throw RingError(ErrorCode::resource_limit, "factor order exceeds 2^32");
    f.modulus = irreducible_poly(p, k);
    return f;
}

uint64_t FactorSpec::mul(uint64_t a, uint64_t b) const {
    if (kind == Kind::local_z) return a * b % order;
    // GF(p^k): digit convolution followed by reduction with x^k = -modulus
    const uint32_t k = exponent;
    uint32_t da[64], db[64];
    uint64_t conv[128] = {0};
    uint64_t ta = a, tb = b;
    for (uint32_t i = 0; i < k; ++i) {
        da[i] = static_cast<uint32_t>(ta % p); ta /= p;
        db[i] = static_cast<uint32_t>(tb % p); tb /= p;
    }
    for (uint32_t i = 0; i < k; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < k; ++j)
            conv[i + j] += static_cast<uint64_t>(da[i]) * db[j];
    }
    for (uint32_t d = 2 * k - 2 + 1; d-- > k;) {
        uint64_t c = conv[d] % p;
        if (!c) continue;
        conv[d] = 0;
        for (uint32_t j = 0; j < k; ++j)
            conv[d - k + j] += c * (p - modulus[j]);
    }
    uint64_t out = 0;
    for (uint32_t i = k; i-- > 0;) out = out * p + conv[i] % p;
    return out;
}

bool FactorSpec::is_unit(uint64_t a) const {
    if (kind == Kind::local_z) return a % p != 0;
    return a != 0;
}

bool FactorSpec::is_nilpotent(uint64_t a) const {
    if (kind == Kind::local_z) return a % p == 0;
    return a == 0;
}

uint32_t FactorSpec::valuation(uint64_t a) const {
    if (kind == Kind::galois_field) return a == 0 ? 1 : 0;
    if (a == 0) return exponent;
    uint32_t t = 0;
    while (a % p == 0) { a /= p; ++t; }
    return t;
}

uint64_t FactorSpec::class_size(uint32_t t) const {
    const uint32_t len = local_length();
    if (t > len)
        throw RingError(ErrorCode::invalid_input, "class_size: valuation out of range");
    if (t == len) return 1;
    if (kind == Kind::galois_field) return order - 1;
    uint64_t high = checked_pow(p, exponent - t, "class size");
    return high - high / p;
}

std::string FactorSpec::to_string() const {
    std::ostringstream os;
    if (kind == Kind::galois_field) {
        os << "GF(" << order << ")";
    } else if (exponent == 1) {
        os << "Z" << p;
    } else {
        os << "Z[" << p << "^" << exponent << "]";
    }
    return os.str();
}

std::string FactorSpec::component_to_string(uint64_t a) const {
    if (kind == Kind::local_z) return std::to_string(a);
    std::vector<uint32_t> low;
    uint64_t t = a;
    for (uint32_t i = 0; i < exponent; ++i) { low.push_back(static_cast<uint32_t>(t % p)); t /= p; }
    return poly_to_string(low, false);
}

RingSpec::RingSpec(std::vector<FactorSpec> factors, uint64_t max_order)
    : factors_(std::move(factors)) {
    if (factors_.empty())
        throw RingError(ErrorCode::invalid_input, "ring spec needs at least one factor");
    order_ = 1;
    for (const auto& f : factors_) {
        if (order_ > max_order / f.order)
            throw RingError(ErrorCode::resource_limit,
                            "ring order exceeds cap " + std::to_string(max_order));
        order_ *= f.order;
    }
    stride_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size() - 1; i-- > 0;)
        stride_[i] = stride_[i + 1] * factors_[i + 1].order;
}

uint64_t RingSpec::canonical_index(const RingElement& e) const {
    validate(e);
    uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        idx += e.comps[i] * stride_[i];
    return idx;
}

RingElement RingSpec::element_of_index(uint64_t idx) const {
    if (idx >= order_)
        throw RingError(ErrorCode::invalid_input, "element index out of range");
    RingElement e;
    e.comps.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        e.comps[i] = idx / stride_[i];
        idx %= stride_[i];
    }
    return e;
}

RingElement RingSpec::zero() const {
    RingElement e;
    e.comps.assign(factors_.size(), 0);
    return e;
}

RingElement RingSpec::one() const {
    RingElement e;
    e.comps.assign(factors_.size(), 1);
    return e;
}

RingElement RingSpec::mul(const RingElement& a, const RingElement& b) const {
    validate(a);
    validate(b);
    RingElement r;
    r.comps.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r.comps[i] = factors_[i].mul(a.comps[i], b.comps[i]);
    return r;
}

bool RingSpec::product_is_zero(const RingElement& a, const RingElement& b) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].mul(a.comps[i], b.comps[i]) != 0) return false;
    return true;
}

ElementClass RingSpec::classify(const RingElement& e) const {
    validate(e);
    bool all_zero = true, all_unit = true, all_nil = true;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        uint64_t c = e.comps[i];
        if (c != 0) all_zero = false;
        if (!factors_[i].is_unit(c)) all_unit = false;
        if (!factors_[i].is_nilpotent(c)) all_nil = false;
    }
    if (all_zero) return ElementClass::zero;
    if (all_unit) return ElementClass::unit;
    if (all_nil) return ElementClass::nilpotent_nonzero;
    return ElementClass::zero_divisor_nonnilpotent;
}

bool RingSpec::is_zero(const RingElement& e) const {
    for (uint64_t c : e.comps)
        if (c != 0) return false;
    return true;
}

bool RingSpec::is_unit(const RingElement& e) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i].is_unit(e.comps[i])) return false;
    return true;
}

bool RingSpec::is_zero_divisor(const RingElement& e) const {
    return !is_unit(e);
}

bool RingSpec::is_reduced() const {
    for (const auto& f : factors_)
        if (f.kind == FactorSpec::Kind::local_z && f.exponent > 1) return false;
    return true;
}

std::vector<uint32_t> RingSpec::valuation_tuple(const RingElement& e) const {
    std::vector<uint32_t> t(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        t[i] = factors_[i].valuation(e.comps[i]);
    return t;
}

void RingSpec::validate(const RingElement& e) const {
    if (e.comps.size() != factors_.size())
        throw RingError(ErrorCode::invalid_input, "element has wrong number of components");
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (e.comps[i] >= factors_[i].order)
            throw RingError(ErrorCode::invalid_input, "element component out of range");
}

std::string RingSpec::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " x ";
        os << factors_[i].to_string();
    }
    return os.str();
}

std::string RingSpec::element_to_string(const RingElement& e) const {
    if (factors_.size() == 1) return factors_[0].component_to_string(e.comps[0]);
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << ",";
        os << factors_[i].component_to_string(e.comps[i]);
    }
    os << ")";
    return os.str();
}

std::vector<RingElement> enumerate(const RingSpec& spec, ElementFilter filter) {
    switch (filter) {
    case ElementFilter::all:
        return enumerate_if(spec, [](const RingElement&) { return true; });
    case ElementFilter::zero_divisors_star:
        return enumerate_if(spec, [&](const RingElement& e) {
            return spec.is_zero_divisor(e) && !spec.is_zero(e);
        });
    case ElementFilter::units:
        return enumerate_if(spec, [&](const RingElement& e) { return spec.is_unit(e); });
    }
    throw RingError(ErrorCode::invalid_input, "unknown filter");
}

std::vector<RingElement> enumerate_if(const RingSpec& spec,
                                      const std::function<bool(const RingElement&)>& pred) {
    std::vector<RingElement> out;
    for (uint64_t i = 0; i < spec.order(); ++i) {
        RingElement e = spec.element_of_index(i);
        if (pred(e)) out.push_back(std::move(e));
    }
    return out;
}

std::vector<AssociateClass> associate_classes(const RingSpec& spec) {
    std::map<std::vector<uint32_t>, AssociateClass> by_valuation;
    for (uint64_t i = 1; i < spec.order(); ++i) {
        RingElement e = spec.element_of_index(i);
        auto t = spec.valuation_tuple(e);
        auto it = by_valuation.find(t);
        if (it == by_valuation.end()) {
            AssociateClass c;
            c.valuations = t;
            c.representative = e;
            c.member_indices.push_back(i);
            by_valuation.emplace(std::move(t), std::move(c));
        } else {
            it->second.member_indices.push_back(i);
        }
    }
    std::vector<AssociateClass> out;
    out.reserve(by_valuation.size());
    for (auto& [t, c] : by_valuation) out.push_back(std::move(c));
    return out;
}

RingSpec decompose_zn(uint64_t n, uint64_t max_order) {
    if (n < 2)
        throw RingError(ErrorCode::invalid_input, "Z_n requires n >= 2");
    std::vector<FactorSpec> factors;
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        uint32_t r = 0;
        while (m % p == 0) { m /= p; ++r; }
        factors.push_back(FactorSpec::local(static_cast<uint32_t>(p), r));
    }
    if (m > 1) factors.push_back(FactorSpec::local(static_cast<uint32_t>(m), 1));
    return RingSpec(std::move(factors), max_order);
}

} // namespace zdchroma
