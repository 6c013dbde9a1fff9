#ifndef UIC_COORD_HPP
#define UIC_COORD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace uic {

// Exact rational coordinate. Always canonical: reduced fraction, positive
// denominator. Arithmetic never rounds; comparisons are exact, so half-open
// touching of unit intervals is decided correctly.
class Coord {
public:
    Coord() : v_(0) {}
    Coord(int n) : v_(n) {}
    Coord(long n) : v_(n) {}
    Coord(long long n) : v_(static_cast<long>(n)) {}
    Coord(long long num, long long den);

    // Accepts "3", "-7", "5/4", "-3/2", "1.25", ".5", "-0.125".
    static Coord parse(std::string_view text);

    Coord operator+(const Coord& o) const { return Coord(mpq_class(v_ + o.v_)); }
    Coord operator-(const Coord& o) const { return Coord(mpq_class(v_ - o.v_)); }
    Coord operator*(const Coord& o) const { return Coord(mpq_class(v_ * o.v_)); }
    Coord operator/(const Coord& o) const;
    Coord operator-() const { return Coord(mpq_class(-v_)); }
    Coord& operator+=(const Coord& o) { v_ += o.v_; return *this; }
    Coord& operator-=(const Coord& o) { v_ -= o.v_; return *this; }

    bool operator==(const Coord& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()) == 0; }
    bool operator!=(const Coord& o) const { return !(*this == o); }
    bool operator<(const Coord& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()) < 0; }
    bool operator>(const Coord& o) const { return o < *this; }
    bool operator<=(const Coord& o) const { return !(o < *this); }
    bool operator>=(const Coord& o) const { return !(*this < o); }

    // Exact floor as an integral Coord (unbounded).
    Coord floor() const;
    // Exact floor narrowed to int64; throws std::overflow_error if it does not fit.
    std::int64_t floor_i64() const;

    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }

    // Canonical text form: "p" when integral, else "p/q".
    std::string str() const;

private:
    explicit Coord(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Coord& c);

}  // namespace uic

#endif
