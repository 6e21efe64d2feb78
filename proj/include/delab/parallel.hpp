#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <vector>

namespace delab {

enum class Exec { serial, parallel };

// Thread budget: DELAB_THREADS if set and positive, else the OpenMP default.
int thread_cap();

// Calls f(i) for i in [0, n). Each index must write only its own slot;
// the parallel path then matches the serial path bit for bit.
template <class F>
void for_index(std::size_t n, F&& f, Exec exec = Exec::parallel) {
    if (exec == Exec::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr err = nullptr;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static) num_threads(thread_cap())
    for (long long i = 0; i < count; ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(delab_for_index_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

template <class F>
std::vector<double> sweep(std::size_t n, F&& f, Exec exec = Exec::parallel) {
    std::vector<double> out(n);
    for_index(n, [&](std::size_t i) { out[i] = f(i); }, exec);
    return out;
}

inline double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Tensor grid over [t0,t1] (endpoints included) x [-pi, pi) (periodic).
struct Grid2 {
    double t0, t1;
    std::size_t nt;
    std::size_t nth;

    std::size_t size() const { return nt * nth; }
    double t(std::size_t i) const {
        return nt == 1 ? t0 : t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(nt - 1);
    }
    double th(std::size_t j) const;
    std::size_t it(std::size_t k) const { return k / nth; }
    std::size_t ith(std::size_t k) const { return k % nth; }
};

}  // namespace delab
