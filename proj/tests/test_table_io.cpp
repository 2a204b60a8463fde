#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/table_io.hpp"

using namespace hypsum;
namespace fs = std::filesystem;

namespace {
struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "hypsum_io_test";
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};
}  // namespace

TEST_CASE("hsv1 round trip, integer and rational tables") {
    TempDir tmp;
    const SpfTable& spf = fixtures::spf_2k();

    FunctionTable om = catalog("omega", spf);
    save_table(om, tmp.path / "omega.hsv1");
    FunctionTable back = load_table(tmp.path / "omega.hsv1");
    CHECK(back.limit == om.limit);
    CHECK(back.integer_valued());
    for (i64 n = 1; n <= om.limit; ++n) CHECK(back.value(n) == om.value(n));

    FunctionTable op = catalog("omega_over_p", spf);
    save_table(op, tmp.path / "op.hsv1");
    FunctionTable back2 = load_table(tmp.path / "op.hsv1");
    CHECK(!back2.integer_valued());
    for (i64 n = 1; n <= op.limit; ++n) CHECK(back2.value(n) == op.value(n));
}

TEST_CASE("hsv1 layout: magic, little-endian limit, pairs") {
    TempDir tmp;
    FunctionTable t;
    t.name = "tiny";
    t.limit = 2;
    t.num = {0, 7, -3};
    save_table(t, tmp.path / "tiny.hsv1");

    std::ifstream in(tmp.path / "tiny.hsv1", std::ios::binary);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    REQUIRE(bytes.size() == 12 + 2 * 16);
    CHECK(bytes[0] == 'H');
    CHECK(bytes[1] == 'S');
    CHECK(bytes[2] == 'V');
    CHECK(bytes[3] == '1');
    CHECK(bytes[4] == 2);  // limit LE
    for (int i = 5; i < 12; ++i) CHECK(bytes[i] == 0);
    CHECK(bytes[12] == 7);  // num(1)
    CHECK(bytes[20] == 1);  // den(1)
    CHECK(bytes[28] == 0xfd);  // num(2) = -3 LE
    CHECK(bytes[29] == 0xff);
}

TEST_CASE("hsv1 rejects corrupt files") {
    TempDir tmp;
    {
        std::ofstream out(tmp.path / "bad_magic", std::ios::binary);
        out << "NOPE12345678901234567890";
    }
    CHECK_THROWS_AS(load_table(tmp.path / "bad_magic"), IoError);

    FunctionTable t;
    t.name = "tiny";
    t.limit = 4;
    t.num = {0, 1, 2, 3, 4};
    save_table(t, tmp.path / "trunc.hsv1");
    fs::resize_file(tmp.path / "trunc.hsv1", 30);
    CHECK_THROWS_AS(load_table(tmp.path / "trunc.hsv1"), IoError);

    CHECK_THROWS_AS(load_table(tmp.path / "missing.hsv1"), IoError);
}

TEST_CASE("save is atomic: no temp file remains") {
    TempDir tmp;
    FunctionTable t;
    t.name = "tiny";
    t.limit = 1;
    t.num = {0, 5};
    save_table(t, tmp.path / "a.hsv1");
    CHECK(fs::exists(tmp.path / "a.hsv1"));
    CHECK(!fs::exists(tmp.path / "a.hsv1.tmp"));
}
