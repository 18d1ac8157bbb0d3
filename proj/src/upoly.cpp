#include "upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wlp {

namespace {
const BigInt kZero = 0;
}

UPoly::UPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c < 0) throw std::invalid_argument("negative coefficient");
    trim();
}

UPoly::UPoly(std::initializer_list<unsigned long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (unsigned long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[k];
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t k = 0; k < out.size(); ++k)
        out[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    return UPoly(std::move(out));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UPoly(std::move(out));
}

UPoly UPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return UPoly();
    std::vector<BigInt> out(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
    return UPoly(std::move(out));
}

std::string UPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            out << coeffs_[k].get_str();
        } else {
            if (coeffs_[k] != 1) out << coeffs_[k].get_str();
            out << "t";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::vector<std::string> UPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

ModeReport mode_analysis(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("mode of the zero polynomial");
    const auto& a = p.coeffs();
    int n = p.degree();
    // First index attaining the maximum; for a unimodal sequence this is
    // the unique i with a_{i-1} < a_i >= a_{i+1} >= ... >= a_n.
    int peak = 0;
    for (int k = 1; k <= n; ++k)
        if (a[k] > a[peak]) peak = k;
    for (int k = 0; k < peak; ++k)
        if (a[k] > a[k + 1]) return {false, std::nullopt};
    for (int k = peak; k < n; ++k)
        if (a[k] < a[k + 1]) return {false, std::nullopt};
    return {true, peak};
}

int lambda_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("lambda requires n >= 1");
    BigInt nn = n;
    BigInt d = 5 * nn * nn + 20 * nn + 24;
    BigInt s = sqrt(d);  // floor square root, exact
    // ceil((5n+2 - sqrt(d)) / 10): when d is not a perfect square the open
    // interval (5n+2-s-1, 5n+2-s) contains no multiple of 10, so the
    // ceiling equals cdiv(5n+2-s, 10) in both cases.
    BigInt num = 5 * nn + 2 - s;
    BigInt q;
    mpz_cdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), 10);
    return static_cast<int>(q.get_si());
}

bool check_unimodal_sum(const UPoly& f, const UPoly& g) {
    ModeReport mf = mode_analysis(f);
    ModeReport mg = mode_analysis(g);
    if (!mf.unimodal || !mg.unimodal)
        throw std::invalid_argument("inputs must be unimodal");
    int p = *mf.mode, q = *mg.mode;
    if (p - q > 1 || q - p > 1)
        throw std::invalid_argument("modes must differ by at most 1");
    ModeReport ms = mode_analysis(f + g);
    if (!ms.unimodal) return false;
    int lo = std::min(p, q);
    return *ms.mode == lo || *ms.mode == lo + 1;
}

} // namespace wlp
