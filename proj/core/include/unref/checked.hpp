#pragma once

#include <cstdint>

#include "unref/error.hpp"

namespace unref {

// Overflow is never silently wrapped: it throws Errc::overflow.

template <typename T> T checked_add(T a, T b)
{
    T r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer overflow in addition");
    return r;
}

template <typename T> T checked_sub(T a, T b)
{
    T r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer overflow in subtraction");
    return r;
}

template <typename T> T checked_mul(T a, T b)
{
    T r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer overflow in multiplication");
    return r;
}

} // namespace unref
