#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdeaccel/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace pdeaccel;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("pdeaccel_io_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

} // namespace

TEST_CASE("zero field dump has the documented layout") {
    TempDir tmp;
    ScalarField z(3, 3, 0.5);
    std::string path = tmp / "z.csv";
    write_field_csv(z, path);
    CHECK(slurp(path) == "3,3,0.5\n0,0,0\n0,0,0\n0,0,0\n");
}

TEST_CASE("field csv round-trips exactly") {
    TempDir tmp;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> dist(-1e3, 1e3);
    ScalarField u(17, 9, 1.0 / 16);
    for (auto& v : u.values)
        v = dist(rng);
    u(0, 0) = 1e-300;
    u(1, 1) = -0.1;
    u(2, 2) = 3.14159265358979312;
    std::string path = tmp / "u.csv";
    write_field_csv(u, path);
    ScalarField back = read_field_csv(path);
    CHECK(back.nx == u.nx);
    CHECK(back.ny == u.ny);
    CHECK(back.dx == u.dx);
    CHECK(back.values == u.values);
}

TEST_CASE("pgm preview") {
    TempDir tmp;
    ScalarField c(5, 4, 0.25, 7.5);
    std::string path = tmp / "c.pgm";
    write_pgm(c, path);
    std::string bytes = slurp(path);
    std::string header = "P5\n5 4\n255\n";
    REQUIRE(bytes.size() == header.size() + 20);
    CHECK(bytes.substr(0, header.size()) == header);
    for (std::size_t k = header.size(); k < bytes.size(); ++k)
        CHECK(bytes[k] == '\0');

    ScalarField ramp(3, 3, 0.5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            ramp(i, j) = double(j);
    write_pgm(ramp, path);
    bytes = slurp(path);
    std::string rheader = "P5\n3 3\n255\n";
    REQUIRE(bytes.size() == rheader.size() + 9);
    CHECK((unsigned char)bytes[rheader.size() + 0] == 0);
    CHECK((unsigned char)bytes[rheader.size() + 1] == 128);
    CHECK((unsigned char)bytes[rheader.size() + 2] == 255);
}

TEST_CASE("trace csv has one row per recorded iterate") {
    TempDir tmp;
    SolveTrace t;
    t.iterations = 3;
    t.residual_history = {1.0, 0.5, 0.25, 0.125};
    t.kinetic_history = {0.0, 0.1, 0.05, 0.01};
    t.potential_history = {2.0, 1.5, 1.2, 1.1};
    std::string path = tmp / "t.csv";
    write_trace_csv(t, path);
    std::string text = slurp(path);
    CHECK(text.substr(0, 38) == "iter,residual,kinetic,potential,total\n");
    int rows = 0;
    for (char ch : text)
        rows += ch == '\n' ? 1 : 0;
    CHECK(rows == 5); // header + 4 iterates
}

TEST_CASE("io failures carry the offending path") {
    ScalarField z(3, 3, 0.5);
    std::string bogus = "/nonexistent-dir-zzz/out.csv";
    CHECK_THROWS_WITH_AS(write_field_csv(z, bogus), doctest::Contains(bogus.c_str()),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(read_field_csv("/nonexistent-dir-zzz/in.csv"),
                         doctest::Contains("in.csv"), std::runtime_error);
}
