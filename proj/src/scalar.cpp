#include "dgw/scalar.hpp"

#include <atomic>
#include <ostream>
#include <stdexcept>

namespace dgw {

namespace {

std::atomic<unsigned long> g_modulus{0};

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace

void Field::use_rationals() { g_modulus.store(0); }

void Field::use_prime(unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    g_modulus.store(p);
}

unsigned long Field::modulus() { return g_modulus.load(std::memory_order_relaxed); }

std::string Field::describe() {
    auto p = modulus();
    return p == 0 ? std::string("rational") : "fp:" + std::to_string(p);
}

void Field::configure(const std::string& text) {
    if (text == "rational" || text == "Q") {
        use_rationals();
        return;
    }
    if (text.rfind("fp:", 0) == 0) {
        std::size_t pos = 0;
        unsigned long p = 0;
        try {
            p = std::stoul(text.substr(3), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field name: " + text);
        }
        if (pos != text.size() - 3) throw std::invalid_argument("bad field name: " + text);
        use_prime(p);
        return;
    }
    throw std::invalid_argument("bad field name: " + text);
}

Scalar::Scalar(long v) : v_(v) { reduce(); }

Scalar::Scalar(const mpq_class& v) : v_(v) { reduce(); }

void Scalar::reduce() {
    unsigned long p = Field::modulus();
    if (p == 0) return;
    mpz_class mod(p);
    mpz_class num = v_.get_num() % mod;
    if (num < 0) num += mod;
    mpz_class den = v_.get_den() % mod;
    if (den != 1) {
        if (den == 0) throw std::domain_error("denominator divisible by the field characteristic");
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
        num = (num * inv) % mod;
    }
    v_ = mpq_class(num);
}

Scalar Scalar::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t.empty()) throw std::invalid_argument("empty scalar literal");
    auto valid_int = [](const std::string& s) {
        std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("bad scalar literal: " + text);
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(q);
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (Field::modulus() == 0) return Scalar(mpq_class(1) / v_);
    mpz_class mod(Field::modulus()), inv;
    mpz_class num = v_.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    return Scalar(mpq_class(inv));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    v_ += o.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    v_ -= o.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    v_ *= o.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.v_ = -r.v_;
    r.reduce();
    return r;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace dgw
