#pragma once

// Little-endian binary readers/writers shared by the on-disk formats.

#include <array>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>

#include "wormhole/graph.hpp"

namespace wormhole::detail {

inline void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<unsigned char, 8> b;
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b.data()), 8);
}

inline void put_u32(std::ostream& out, std::uint32_t v) {
    std::array<unsigned char, 4> b;
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b.data()), 4);
}

inline void put_u16(std::ostream& out, std::uint16_t v) {
    std::array<unsigned char, 2> b{static_cast<unsigned char>(v),
                                   static_cast<unsigned char>(v >> 8)};
    out.write(reinterpret_cast<const char*>(b.data()), 2);
}

inline void put_u8(std::ostream& out, std::uint8_t v) {
    out.put(static_cast<char>(v));
}

inline void put_f64(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

inline std::uint64_t get_u64(std::istream& in) {
    std::array<unsigned char, 8> b;
    if (!in.read(reinterpret_cast<char*>(b.data()), 8))
        throw FormatError("unexpected end of file");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

inline std::uint32_t get_u32(std::istream& in) {
    std::array<unsigned char, 4> b;
    if (!in.read(reinterpret_cast<char*>(b.data()), 4))
        throw FormatError("unexpected end of file");
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

inline std::uint16_t get_u16(std::istream& in) {
    std::array<unsigned char, 2> b;
    if (!in.read(reinterpret_cast<char*>(b.data()), 2))
        throw FormatError("unexpected end of file");
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

inline std::uint8_t get_u8(std::istream& in) {
    int c = in.get();
    if (c == std::char_traits<char>::eof())
        throw FormatError("unexpected end of file");
    return static_cast<std::uint8_t>(c);
}

inline double get_f64(std::istream& in) {
    std::uint64_t bits = get_u64(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

// Magics are 7 bytes including the trailing NUL.
inline void put_magic(std::ostream& out, const char (&magic)[8]) {
    out.write(magic, 7);
}

inline void check_magic(std::istream& in, const char (&magic)[8],
                        const char* what) {
    char buf[7];
    if (!in.read(buf, 7) || std::memcmp(buf, magic, 7) != 0)
        throw FormatError(std::string(what) + ": bad magic");
}

}  // namespace wormhole::detail
