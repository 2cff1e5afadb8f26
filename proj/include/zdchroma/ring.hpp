#ifndef ZDCHROMA_RING_HPP
#define ZDCHROMA_RING_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdchroma {

enum class ErrorCode {
    invalid_input,
    resource_limit,
    out_of_scope,
    too_large,
};

class RingError : public std::runtime_error {
public:
    RingError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

bool is_prime(uint64_t n);

// Monic irreducible of degree k over Z_p with the lexicographically smallest
// coefficient vector, compared from the constant term up. Returned as the k
// low-order coefficients c[0..k-1]; the leading 1 is implicit.
std::vector<uint32_t> irreducible_poly(uint32_t p, uint32_t k);

std::string poly_to_string(const std::vector<uint32_t>& low_coeffs, bool monic_of_degree_k);

// One factor of the ring: Z_{p^r} or GF(p^k). Component values are encoded
// as integers in [0, order): residues for Z_{p^r}, base-p digit vectors
// (constant term least significant) for GF(p^k).
struct FactorSpec {
    enum class Kind { local_z, galois_field };

    Kind kind = Kind::local_z;
    uint32_t p = 2;
    uint32_t exponent = 1;           // r for Z_{p^r}, k for GF(p^k)
    uint64_t order = 2;              // p^exponent
    std::vector<uint32_t> modulus;   // GF only: low coeffs of the reduction polynomial

    static FactorSpec local(uint32_t p, uint32_t r);
    static FactorSpec field(uint32_t p, uint32_t k);

    uint64_t mul(uint64_t a, uint64_t b) const;
    bool is_unit(uint64_t a) const;
    bool is_nilpotent(uint64_t a) const;   // includes 0

    // Associate classes of a factor are cut by "valuation": for Z_{p^r} the
    // p-adic valuation in [0, r] (0 maps to r), for GF(q) 0 on units and 1
    // on zero. local_length() is the top valuation.
    uint32_t local_length() const { return kind == Kind::local_z ? exponent : 1; }
    uint32_t valuation(uint64_t a) const;
    uint64_t class_size(uint32_t t) const;

    std::string to_string() const;                 // "Z[2^3]", "Z5", "GF(4)"
    std::string component_to_string(uint64_t a) const;

    friend bool operator==(const FactorSpec& a, const FactorSpec& b) {
        return a.kind == b.kind && a.p == b.p && a.exponent == b.exponent;
    }
};

struct RingElement {
    std::vector<uint64_t> comps;

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.comps == b.comps;
    }
};

enum class ElementClass { zero, unit, zero_divisor_nonnilpotent, nilpotent_nonzero };

inline constexpr uint64_t kDefaultMaxOrder = 65536;

// A finite commutative ring given as an ordered direct product of factors.
// Immutable once constructed; all member functions are const and thread-safe.
class RingSpec {
public:
    RingSpec(std::vector<FactorSpec> factors, uint64_t max_order = kDefaultMaxOrder);

    const std::vector<FactorSpec>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }
    uint64_t order() const { return order_; }

    // Mixed-radix encoding, first factor most significant (last varies fastest).
    uint64_t canonical_index(const RingElement& e) const;
    RingElement element_of_index(uint64_t idx) const;

    RingElement zero() const;
    RingElement one() const;

    RingElement mul(const RingElement& a, const RingElement& b) const;
    // Componentwise test with early exit; avoids materializing the product.
    bool product_is_zero(const RingElement& a, const RingElement& b) const;

    ElementClass classify(const RingElement& e) const;
    bool is_zero(const RingElement& e) const;
    bool is_unit(const RingElement& e) const;
    bool is_zero_divisor(const RingElement& e) const;   // includes 0

    // No nonzero nilpotents, i.e. every local factor has exponent 1.
    bool is_reduced() const;

    std::vector<uint32_t> valuation_tuple(const RingElement& e) const;

    void validate(const RingElement& e) const;

    std::string to_string() const;                       // "Z[2^3] x Z[2^4]"
    std::string element_to_string(const RingElement& e) const;

private:
    std::vector<FactorSpec> factors_;
    std::vector<uint64_t> stride_;
    uint64_t order_;
};

enum class ElementFilter { all, zero_divisors_star, units };

// Elements in canonical-index order.
std::vector<RingElement> enumerate(const RingSpec& spec, ElementFilter filter);
std::vector<RingElement> enumerate_if(const RingSpec& spec,
                                      const std::function<bool(const RingElement&)>& pred);

// One associate class of R^*: all unit multiples of the representative.
// Classes are indexed by the valuation tuple of their members.
struct AssociateClass {
    std::vector<uint32_t> valuations;       // one entry per factor
    RingElement representative;            // smallest canonical index in the class
    std::vector<uint64_t> member_indices;   // canonical indices, ascending
};

// Partition of the nonzero elements, sorted by valuation tuple.
std::vector<AssociateClass> associate_classes(const RingSpec& spec);

// Z_n as a product of Z_{p^r} factors, primes ascending.
RingSpec decompose_zn(uint64_t n, uint64_t max_order = kDefaultMaxOrder);

} // namespace zdchroma

#endif
