#include "rzeta/oracle/ring.hpp"

namespace rzeta::oracle {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string ring_kind_name(RingKind k) {
    return k == RingKind::IntegersMod ? "zmod" : "tpoly";
}

namespace {

int pow_int(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

ResidueRing::ResidueRing(int p, int ell, RingKind kind) : p_(p), ell_(ell), kind_(kind) {
    if (!is_prime(p)) throw InvalidPrime("p = " + std::to_string(p) + " is not prime");
    if (ell < 1) throw Error("ring length must be >= 1");
    size_ = pow_int(p, ell);
    if (size_ > 4096) throw Error("residue ring too large to tabulate");

    add_.resize(static_cast<std::size_t>(size_) * size_);
    mul_.resize(static_cast<std::size_t>(size_) * size_);
    neg_.resize(size_);

    auto digits = [&](int a, int* d) {
        for (int i = 0; i < ell_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
    };
    auto undigits = [&](const int* d) {
        int a = 0;
        for (int i = ell_ - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    };

    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b) {
            if (kind_ == RingKind::IntegersMod) {
                add_[a * size_ + b] = (a + b) % size_;
                mul_[a * size_ + b] = static_cast<int>((static_cast<long long>(a) * b) % size_);
            } else {
                int da[16], db[16], dc[16] = {0};
                digits(a, da);
                digits(b, db);
                for (int i = 0; i < ell_; ++i) dc[i] = (da[i] + db[i]) % p_;
                add_[a * size_ + b] = undigits(dc);
                for (int i = 0; i < ell_; ++i) dc[i] = 0;
                for (int i = 0; i < ell_; ++i)
                    for (int j = 0; i + j < ell_; ++j) dc[i + j] = (dc[i + j] + da[i] * db[j]) % p_;
                mul_[a * size_ + b] = undigits(dc);
            }
        }
    }
    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b) {
            if (add(a, b) == 0) {
                neg_[a] = b;
                break;
            }
        }
    }
    for (int a = 0; a < size_; ++a)
        if (is_unit(a)) units_.push_back(a);
}

int ResidueRing::unit_inverse(int a) const {
    if (!is_unit(a)) throw Error("not a unit");
    for (int b : units_)
        if (mul(a, b) == 1) return b;
    throw Error("unit inverse not found");  // unreachable
}

int ResidueRing::pi_pow_times(int a, int k) const {
    if (a < 0 || a >= p_ || k < 0 || k >= ell_) throw Error("bad pi multiple");
    return a * pow_int(p_, k);
}

}  // namespace rzeta::oracle
