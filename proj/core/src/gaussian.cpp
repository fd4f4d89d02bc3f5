#include "agrarian/gaussian.hpp"

#include "agrarian/error.hpp"

#include <cctype>
#include <ostream>

namespace agrarian {

Gaussian Gaussian::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in Q(i)");
    mpq_class n = norm();
    return Gaussian(re_ / n, -im_ / n);
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    if (o.is_real()) {
        if (sgn(o.re_) == 0) throw DomainError("division by zero in Q(i)");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string Gaussian::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string ims = (im_ == 1) ? "" : (im_ == -1) ? "-" : im_.get_str();
    if (sgn(re_) == 0) return ims + "i";
    std::string out = re_.get_str();
    if (sgn(im_) > 0) out += "+";
    if (im_ == -1) return out + "-i";
    if (im_ == 1) return out + "i";
    return out + im_.get_str() + "i";
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.to_string(); }

namespace {

// Reads [-]digits[/digits] starting at pos; advances pos. Returns false if no digits.
bool read_rational(std::string_view s, std::size_t& pos, mpq_class& out, bool allow_sign) {
    std::size_t start = pos;
    std::string buf;
    if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        if (s[pos] == '-') buf.push_back('-');
        ++pos;
    }
    std::size_t digits_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) buf.push_back(s[pos++]);
    if (pos == digits_start) {
        pos = start;
        return false;
    }
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t den_start = pos;
        buf.push_back('/');
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) buf.push_back(s[pos++]);
        if (pos == den_start) throw ParseError("expected denominator digits", pos);
    }
    mpq_class q;
    if (q.set_str(buf, 10) != 0) throw ParseError("bad rational literal", start);
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator", start);
    q.canonicalize();
    out = q;
    return true;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
    std::size_t pos = 0;
    mpq_class q;
    if (!read_rational(text, pos, q, true)) throw ParseError("expected rational", pos);
    if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
    return q;
}

Gaussian Gaussian::parse(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view s = text.substr(0, end);
    if (pos == end) throw ParseError("empty scalar", pos);

    mpq_class first;
    bool neg = false;
    std::size_t p0 = pos;
    if (s[pos] == '-') {
        neg = true;
    }
    if (!read_rational(s, pos, first, true)) {
        // bare "i" or "-i"
        std::size_t q = p0 + (neg ? 1 : 0);
        if (q < s.size() && s[q] == 'i' && q + 1 == s.size()) return Gaussian(0, neg ? -1 : 1);
        throw ParseError("expected rational or imaginary unit", p0);
    }
    if (pos == s.size()) return Gaussian(first);
    if (s[pos] == 'i') {
        if (pos + 1 != s.size()) throw ParseError("trailing characters after imaginary part", pos + 1);
        return Gaussian(0, first);
    }
    if (s[pos] != '+' && s[pos] != '-') throw ParseError("expected '+', '-' or 'i'", pos);
    bool minus = s[pos] == '-';
    ++pos;
    mpq_class second;
    if (pos < s.size() && s[pos] == 'i') {
        second = 1;
    } else if (!read_rational(s, pos, second, false)) {
        throw ParseError("expected imaginary part", pos);
    }
    if (pos >= s.size() || s[pos] != 'i') throw ParseError("imaginary part must end with 'i'", pos);
    if (pos + 1 != s.size()) throw ParseError("trailing characters", pos + 1);
    return Gaussian(first, minus ? mpq_class(-second) : second);
}

}  // namespace agrarian
