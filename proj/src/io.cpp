#include "besov/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "besov/errors.hpp"

namespace besov {
namespace {

static_assert(std::endian::native == std::endian::little,
              "container I/O assumes a little-endian host");

constexpr uint32_t container_version = 1;

void put_u32(std::ostream& os, uint32_t x) { os.write(reinterpret_cast<const char*>(&x), 4); }
void put_i32(std::ostream& os, int32_t x) { os.write(reinterpret_cast<const char*>(&x), 4); }
void put_u64(std::ostream& os, uint64_t x) { os.write(reinterpret_cast<const char*>(&x), 8); }

uint32_t get_u32(std::istream& is, const char* what) {
    uint32_t x = 0;
    if (!is.read(reinterpret_cast<char*>(&x), 4)) throw io_error(std::string("truncated ") + what);
    return x;
}

int32_t get_i32(std::istream& is, const char* what) {
    int32_t x = 0;
    if (!is.read(reinterpret_cast<char*>(&x), 4)) throw io_error(std::string("truncated ") + what);
    return x;
}

uint64_t get_u64(std::istream& is, const char* what) {
    uint64_t x = 0;
    if (!is.read(reinterpret_cast<char*>(&x), 8)) throw io_error(std::string("truncated ") + what);
    return x;
}

void put_doubles(std::ostream& os, const std::vector<double>& v) {
    os.write(reinterpret_cast<const char*>(v.data()), std::streamsize(v.size() * 8));
}

void get_doubles(std::istream& is, std::vector<double>& v, const char* what) {
    if (!is.read(reinterpret_cast<char*>(v.data()), std::streamsize(v.size() * 8)))
        throw io_error(std::string("truncated payload in ") + what);
}

Grid read_grid_header(std::istream& is, const char* magic, const char* what) {
    char m[4];
    if (!is.read(m, 4)) throw io_error(std::string("truncated header in ") + what);
    if (std::memcmp(m, magic, 4) != 0)
        throw io_error(std::string("bad magic in ") + what + " (expected " + magic + ")");
    uint32_t version = get_u32(is, what);
    if (version != container_version)
        throw io_error("unsupported container version " + std::to_string(version));
    uint32_t d = get_u32(is, what), W = get_u32(is, what), r = get_u32(is, what);
    if (d < 1 || d > 2 || W == 0 || W > (1u << 20) || r > 24)
        throw io_error(std::string("implausible grid header in ") + what);
    try {
        return Grid(int(d), int(W), int(r));
    } catch (const invalid_params_error& e) {
        throw io_error(std::string("invalid grid in ") + what + ": " + e.what());
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot open for reading: " + path);
    return is;
}

} // namespace

void write_function(const std::string& path, const SampledFunction& f) {
    auto os = open_out(path);
    os.write("BSVF", 4);
    put_u32(os, container_version);
    put_u32(os, uint32_t(f.grid.d));
    put_u32(os, uint32_t(f.grid.W));
    put_u32(os, uint32_t(f.grid.r));
    put_doubles(os, f.v);
    if (!os) throw io_error("write failed: " + path);
}

SampledFunction read_function(const std::string& path) {
    auto is = open_in(path);
    Grid g = read_grid_header(is, "BSVF", path.c_str());
    SampledFunction f(g);
    get_doubles(is, f.v, path.c_str());
    char extra;
    if (is.read(&extra, 1)) throw io_error("trailing bytes in " + path);
    for (size_t i = 0; i < f.v.size(); ++i)
        if (!std::isfinite(f.v[i]))
            throw io_error("non-finite sample at flat index " + std::to_string(i) + " in " + path);
    return f;
}

void write_coeffs(const std::string& path, const WaveletCoeffs& coeffs) {
    auto os = open_out(path);
    os.write("BSVW", 4);
    put_u32(os, container_version);
    put_u32(os, uint32_t(coeffs.grid.d));
    put_u32(os, uint32_t(coeffs.grid.W));
    put_u32(os, uint32_t(coeffs.grid.r));
    put_i32(os, coeffs.j_min);
    put_i32(os, coeffs.j_max);
    uint32_t blocks = 1;
    for (const auto& level : coeffs.details) blocks += uint32_t(level.size());
    put_u32(os, blocks);
    put_i32(os, coeffs.j_min);
    put_i32(os, 0);
    put_u64(os, coeffs.scaling.size());
    for (size_t li = 0; li < coeffs.details.size(); ++li) {
        for (size_t o = 0; o < coeffs.details[li].size(); ++o) {
            put_i32(os, coeffs.j_min + int32_t(li));
            put_i32(os, int32_t(o + 1));
            put_u64(os, coeffs.details[li][o].size());
        }
    }
    put_doubles(os, coeffs.scaling);
    for (const auto& level : coeffs.details)
        for (const auto& block : level) put_doubles(os, block);
    if (!os) throw io_error("write failed: " + path);
}

WaveletCoeffs read_coeffs(const std::string& path) {
    auto is = open_in(path);
    WaveletCoeffs c;
    c.grid = read_grid_header(is, "BSVW", path.c_str());
    c.j_min = get_i32(is, path.c_str());
    c.j_max = get_i32(is, path.c_str());
    if (c.j_min > c.j_max || c.j_max - c.j_min > 30)
        throw io_error("implausible level range in " + path);
    uint32_t blocks = get_u32(is, path.c_str());
    int orientations = (1 << c.grid.d) - 1;
    uint32_t expected = 1 + uint32_t(c.j_max - c.j_min + 1) * uint32_t(orientations);
    if (blocks != expected)
        throw io_error("block table size " + std::to_string(blocks) + " != expected " +
                       std::to_string(expected) + " in " + path);
    struct Entry {
        int32_t level, orientation;
        uint64_t count;
    };
    std::vector<Entry> table(blocks);
    for (auto& e : table) {
        e.level = get_i32(is, path.c_str());
        e.orientation = get_i32(is, path.c_str());
        e.count = get_u64(is, path.c_str());
        if (e.count > (uint64_t(1) << 28)) throw io_error("implausible block size in " + path);
    }
    if (table[0].level != c.j_min || table[0].orientation != 0)
        throw io_error("first block must be the scaling block in " + path);
    c.scaling.resize(size_t(table[0].count));
    get_doubles(is, c.scaling, path.c_str());
    c.details.assign(size_t(c.j_max - c.j_min + 1),
                     std::vector<std::vector<double>>(size_t(orientations)));
    size_t idx = 1;
    for (int j = c.j_min; j <= c.j_max; ++j) {
        for (int o = 1; o <= orientations; ++o, ++idx) {
            const Entry& e = table[idx];
            if (e.level != j || e.orientation != o)
                throw io_error("block table out of order in " + path);
            auto& block = c.details[size_t(j - c.j_min)][size_t(o - 1)];
            block.resize(size_t(e.count));
            get_doubles(is, block, path.c_str());
        }
    }
    char extra;
    if (is.read(&extra, 1)) throw io_error("trailing bytes in " + path);
    return c;
}

void write_csv(const std::string& path, const SampledFunction& f) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open for writing: " + path);
    char buf[32];
    for (double x : f.v) {
        std::snprintf(buf, sizeof buf, "%.17g\n", x);
        os << buf;
    }
    if (!os) throw io_error("write failed: " + path);
}

} // namespace besov
