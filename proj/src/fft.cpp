#include "ngpc/fft.hpp"

#include <cmath>
#include <numbers>

namespace ngpc {
namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) *
                           (inverse ? 1.0 : -1.0);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

void dft_direct(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    std::vector<std::complex<double>> out(n);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            const double ang = sign * 2.0 * std::numbers::pi *
                               static_cast<double>(k) * static_cast<double>(m) /
                               static_cast<double>(n);
            acc += a[m] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    a = std::move(out);
}

} // namespace

void fft_forward(std::vector<std::complex<double>>& data) {
    if (data.empty()) return;
    if (is_pow2(data.size()))
        fft_radix2(data, false);
    else
        dft_direct(data, false);
}

void fft_inverse(std::vector<std::complex<double>>& data) {
    if (data.empty()) return;
    if (is_pow2(data.size()))
        fft_radix2(data, true);
    else
        dft_direct(data, true);
    const double inv_n = 1.0 / static_cast<double>(data.size());
    for (auto& v : data) v *= inv_n;
}

} // namespace ngpc
