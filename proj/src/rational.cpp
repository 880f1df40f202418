#include "upb/rational.hpp"

#include <cctype>
#include <ostream>

namespace upb {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedRational: return "malformed_rational";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::NonOrthogonal: return "non_orthogonal";
    case ErrorCode::ZeroFactor: return "zero_factor";
    case ErrorCode::BadDocument: return "bad_document";
    case ErrorCode::BadRecipe: return "bad_recipe";
    case ErrorCode::HypothesisViolated: return "hypothesis_violated";
    case ErrorCode::InvalidCandidate: return "invalid_candidate";
    case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

Rational::Rational(long num, long den) {
    if (den == 0) fail(ErrorCode::MalformedRational, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::MalformedRational, "division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    if (!valid_integer_token(num))
        fail(ErrorCode::MalformedRational, "bad rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpq_class v;
    if (slash == std::string::npos) {
        v = mpq_class(num);
    } else {
        const std::string den = text.substr(slash + 1);
        if (!valid_integer_token(den) || den[0] == '-' || den[0] == '+')
            fail(ErrorCode::MalformedRational, "bad rational '" + text + "'");
        if (mpz_class(den) == 0)
            fail(ErrorCode::MalformedRational, "zero denominator in '" + text + "'");
        v = mpq_class(num + "/" + den);
    }
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    const Rational nre = re * o.re - im * o.im;
    const Rational nim = re * o.im + im * o.re;
    re = nre;
    im = nim;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    const Rational n2 = o.norm2();
    if (n2.is_zero()) fail(ErrorCode::MalformedRational, "division by zero");
    *this *= o.conj();
    re /= n2;
    im /= n2;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << "(" << z.re << (z.im.sign() < 0 ? "" : "+") << z.im << "i)";
}

} // namespace upb
