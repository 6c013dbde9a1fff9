#include "uic/coord.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace uic {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Coord::Coord(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Coord: zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
}

Coord Coord::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Coord: empty literal");

    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        pos = 1;
    }
    std::string body = s.substr(pos);
    if (body.empty()) throw std::invalid_argument("Coord: bad literal '" + s + "'");

    mpq_class v;
    auto slash = body.find('/');
    auto dot = body.find('.');
    if (slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("Coord: bad fraction '" + s + "'");
        mpz_class n(num), d(den);
        if (d == 0) throw std::invalid_argument("Coord: zero denominator in '" + s + "'");
        v = mpq_class(n, d);
    } else if (dot != std::string::npos) {
        std::string ip = body.substr(0, dot);
        std::string fp = body.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw std::invalid_argument("Coord: bad decimal '" + s + "'");
        if (!ip.empty() && !all_digits(ip))
            throw std::invalid_argument("Coord: bad decimal '" + s + "'");
        if (!fp.empty() && !all_digits(fp))
            throw std::invalid_argument("Coord: bad decimal '" + s + "'");
        mpz_class n(ip.empty() ? std::string("0") : ip);
        mpz_class d(1);
        for (char c : fp) {
            n = n * 10 + (c - '0');
            d *= 10;
        }
        v = mpq_class(n, d);
    } else {
        if (!all_digits(body)) throw std::invalid_argument("Coord: bad literal '" + s + "'");
        v = mpq_class(mpz_class(body));
    }
    v.canonicalize();
    if (neg) v = -v;
    return Coord(std::move(v));
}

Coord Coord::operator/(const Coord& o) const {
    if (o.v_ == 0) throw std::invalid_argument("Coord: division by zero");
    return Coord(mpq_class(v_ / o.v_));
}

Coord Coord::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Coord(mpq_class(q));
}

std::int64_t Coord::floor_i64() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("Coord: floor out of int64 range");
    return static_cast<std::int64_t>(q.get_si());
}

std::string Coord::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Coord& c) {
    return os << c.str();
}

}  // namespace uic
