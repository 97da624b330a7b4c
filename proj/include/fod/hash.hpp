#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>

namespace fod {

/// Streaming FNV-1a (64-bit). Used for content addressing of artifacts and
/// stage caches; not cryptographic.
class Hasher {
  public:
    void update(const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h_ ^= p[i];
            h_ *= 0x100000001b3ull;
        }
    }

    void update(std::string_view s) { update(s.data(), s.size()); }

    template <typename T>
    void update_value(const T& v) {
        static_assert(std::is_trivially_copyable_v<T>);
        update(&v, sizeof(T));
    }

    template <typename T>
    void update_span(std::span<const T> s) {
        static_assert(std::is_trivially_copyable_v<T>);
        update(s.data(), s.size_bytes());
    }

    std::uint64_t digest() const { return h_; }

    std::string hex() const {
        static const char* k = "0123456789abcdef";
        std::string out(16, '0');
        std::uint64_t v = h_;
        for (int i = 15; i >= 0; --i) {
            out[static_cast<std::size_t>(i)] = k[v & 0xf];
            v >>= 4;
        }
        return out;
    }

  private:
    std::uint64_t h_ = 0xcbf29ce484222325ull;
};

inline std::string hash_hex(std::string_view s) {
    Hasher h;
    h.update(s);
    return h.hex();
}

} // namespace fod
