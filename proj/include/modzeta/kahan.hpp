#pragma once

#include <complex>

namespace modzeta {

// Kahan compensated accumulator. Sums near sigma = 1 can run to 1e8 terms;
// plain doubles would lose ~1e-8 relative there.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double value) {
        const double y = value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    KahanSum& operator+=(double v) { add(v); return *this; }
    double value() const { return sum + comp; }
};

struct KahanComplexSum {
    KahanSum re, im;
    void add(std::complex<double> z) { re.add(z.real()); im.add(z.imag()); }
    KahanComplexSum& operator+=(std::complex<double> z) { add(z); return *this; }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

} // namespace modzeta
