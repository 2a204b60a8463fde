#include "hypsum/table_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include "hypsum/errors.hpp"

namespace hypsum {

namespace {

constexpr char kMagic[4] = {'H', 'S', 'V', '1'};

void put_u64_le(std::vector<unsigned char>& buf, u64 v) {
    for (int i = 0; i < 8; ++i) buf.push_back((unsigned char)(v >> (8 * i)));
}

u64 get_u64_le(const unsigned char* p) {
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64(p[i]) << (8 * i);
    return v;
}

}  // namespace

void save_table(const FunctionTable& t, const std::filesystem::path& file) {
    std::vector<unsigned char> buf;
    buf.reserve(12 + 16 * size_t(t.limit));
    buf.insert(buf.end(), kMagic, kMagic + 4);
    put_u64_le(buf, u64(t.limit));
    for (i64 n = 1; n <= t.limit; ++n) {
        put_u64_le(buf, u64(t.num[size_t(n)]));
        put_u64_le(buf, u64(t.den.empty() ? 1 : t.den[size_t(n)]));
    }

    // write-temp-then-rename so partially written caches are never picked up
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("save_table: cannot open " + tmp.string());
        out.write(reinterpret_cast<const char*>(buf.data()),
                  std::streamsize(buf.size()));
        if (!out) throw IoError("save_table: write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, file, ec);
    if (ec) throw IoError("save_table: rename failed: " + ec.message());
}

FunctionTable load_table(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("load_table: cannot open " + file.string());
    unsigned char head[12];
    in.read(reinterpret_cast<char*>(head), 12);
    if (!in || std::memcmp(head, kMagic, 4) != 0)
        throw IoError("load_table: bad magic in " + file.string());
    u64 limit = get_u64_le(head + 4);
    if (limit == 0 || limit > (u64(1) << 31))
        throw IoError("load_table: implausible limit in " + file.string());

    std::vector<unsigned char> body(16 * size_t(limit));
    in.read(reinterpret_cast<char*>(body.data()), std::streamsize(body.size()));
    if (!in || in.gcount() != std::streamsize(body.size()))
        throw IoError("load_table: truncated file " + file.string());

    FunctionTable t;
    t.limit = i64(limit);
    t.num.assign(size_t(limit) + 1, 0);
    bool any_den = false;
    std::vector<i64> dens(size_t(limit) + 1, 1);
    for (u64 n = 1; n <= limit; ++n) {
        t.num[size_t(n)] = i64(get_u64_le(body.data() + 16 * (n - 1)));
        i64 d = i64(get_u64_le(body.data() + 16 * (n - 1) + 8));
        if (d < 1) throw IoError("load_table: nonpositive denominator");
        dens[size_t(n)] = d;
        any_den = any_den || d != 1;
    }
    if (any_den) t.den = std::move(dens);
    return t;
}

}  // namespace hypsum
