#include "latmin/rational.hpp"

#include <cctype>

namespace latmin {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw DomainError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den))
            throw DomainError("malformed rational literal: " + text);
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw DomainError("malformed rational literal: " + text);
        if (q.get_den() == 0) throw DomainError("zero denominator in: " + text);
        q.canonicalize();
        return q;
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        // exact decimal fraction: a.b -> (a*10^k + b) / 10^k
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '-' || head[0] == '+')) head.erase(head.begin());
        if (head.empty()) head = "0";
        if (tail.empty()) tail = "0";
        if (!is_integer_literal(head) || !is_integer_literal(tail))
            throw DomainError("malformed decimal literal: " + text);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
        BigInt value = BigInt(head) * scale + BigInt(tail);
        Rational q(value, scale);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }

    if (!is_integer_literal(s)) throw DomainError("malformed rational literal: " + text);
    return Rational(BigInt(s));
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

} // namespace latmin
