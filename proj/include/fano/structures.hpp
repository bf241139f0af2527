#ifndef FANO_STRUCTURES_HPP
#define FANO_STRUCTURES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fano/fano_core.hpp"

// Norms and multiplication factors on the plane.  Both live in tiny canonical
// encodings: a norm is the mask of its linear form, a factor is 21 sign bits,
// one per unordered point pair in lexicographic order.

namespace fano {

enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }
constexpr int sign_value(Sign s) { return static_cast<int>(s); }

// The mutually inverse maps between GF(2) and {-1,+1}: 0 -> +1, 1 -> -1.
constexpr Sign sign_exp(unsigned bit) { return bit ? Sign::minus : Sign::plus; }
constexpr unsigned sign_log(Sign s) { return s == Sign::minus ? 1u : 0u; }

// Multiplicative norm N(P) = sign_exp(form(P)).
struct Norm {
    LinearForm form;

    friend constexpr bool operator==(Norm, Norm) = default;
    friend constexpr auto operator<=>(Norm, Norm) = default;
};

constexpr Norm trivial_norm() { return Norm{LinearForm(0)}; }

constexpr Sign eval_norm(Norm n, Point p) { return sign_exp(n.form(p)); }

// Where the norm takes the value +1: the whole plane for the trivial norm,
// the kernel line otherwise (nullopt means the whole plane).
std::optional<Line> norm_support(Norm n);

// All 8 norms, ordered by form mask.
std::array<Norm, 8> all_norms();

// Lexicographic index of an unordered pair {p,q}, p != q, in 0..20.
constexpr unsigned pair_index(Point p, Point q) {
    assert(p != q);
    unsigned lo = std::min(p.index, q.index), hi = std::max(p.index, q.index);
    // pairs (1,*) first, then (2,*), ...
    constexpr unsigned offset[8] = {0, 0, 6, 11, 15, 18, 20, 0};
    return offset[lo] + (hi - lo - 1);
}

// Antisymmetric sign assignment on ordered pairs of distinct points.
// Bit k of the encoding is sign_log of the k-th pair's (min,max) sign,
// so encoding 0 is the all-plus factor and encodings range over 0..2^21-1.
class MultFactor {
  public:
    static constexpr std::uint32_t encoding_count = 1u << 21;

    constexpr MultFactor() = default;
    static constexpr MultFactor from_encoding(std::uint32_t enc) {
        assert(enc < encoding_count);
        MultFactor f;
        f.bits_ = enc;
        return f;
    }

    constexpr std::uint32_t encoding() const { return bits_; }

    constexpr unsigned logbit(Point p, Point q) const {
        unsigned bit = (bits_ >> pair_index(p, q)) & 1u;
        return p.index < q.index ? bit : bit ^ 1u;
    }
    constexpr Sign sign(Point p, Point q) const { return sign_exp(logbit(p, q)); }

    constexpr MultFactor negated() const { return from_encoding(bits_ ^ (encoding_count - 1)); }

    friend constexpr bool operator==(MultFactor, MultFactor) = default;
    friend constexpr auto operator<=>(MultFactor, MultFactor) = default;

  private:
    std::uint32_t bits_ = 0;
};

struct FuturePast {
    PointSet future;  // {Q != P : sign(P,Q) = +1}
    PointSet past;    // {Q != P : sign(P,Q) = -1}
};

FuturePast future_past(MultFactor f, Point p);

// Build a factor from an explicit arrow list (arrow P->Q means sign(P,Q)=+1).
// Each unordered pair must appear in exactly one direction; throws
// MissingPairError / ConflictingPairError otherwise.
MultFactor mf_from_arrows(std::span<const std::pair<Point, Point>> arrows);

} // namespace fano

#endif
