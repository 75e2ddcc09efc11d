#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace fiblie {

// F_0 = 0, F_1 = F_2 = 1.  F_91 would overflow int64, and no computation here
// comes near it: a degree bound D only ever involves pivots with F_{n-1} <= D.
inline constexpr int kMaxFib = 90;

namespace detail {
constexpr std::array<std::int64_t, kMaxFib + 1> make_fib_table() {
    std::array<std::int64_t, kMaxFib + 1> f{};
    f[0] = 0;
    f[1] = 1;
    for (int n = 2; n <= kMaxFib; ++n)
        f[n] = f[n - 1] + f[n - 2];
    return f;
}
inline constexpr auto kFib = make_fib_table();
}  // namespace detail

inline std::int64_t fibonacci(int n) {
    if (n < 0 || n > kMaxFib)
        throw std::out_of_range("fibonacci: index out of range");
    return detail::kFib[static_cast<std::size_t>(n)];
}

}  // namespace fiblie
