#include <catch2/catch.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cwdenoise/image.hpp"
#include "cwdenoise/metrics.hpp"
#include "cwdenoise/noise.hpp"
#include "cwdenoise/pgm.hpp"
#include "support.hpp"

using namespace cwdenoise;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("cwdenoise_test_" + name);
}

void write_bytes(const std::filesystem::path& p, const std::string& bytes) {
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_CASE("load_pgm decodes binary P5") {
    auto p = temp_file("p5.pgm");
    write_bytes(p, std::string("P5\n2 2\n255\n") + '\0' + '\xff' + '\x80' + '\x40');
    Image img = load_pgm(p.string());
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.peak == 255.0);
    CHECK(img.pixels == std::vector<double>{0, 255, 128, 64});
    std::filesystem::remove(p);
}

TEST_CASE("load_pgm decodes ASCII P2 identically") {
    auto p5 = temp_file("eq5.pgm"), p2 = temp_file("eq2.pgm");
    write_bytes(p5, std::string("P5\n2 2\n255\n") + '\0' + '\xff' + '\x80' + '\x40');
    write_bytes(p2, "P2\n# a comment\n2 2\n255\n0 255\n128 64\n");
    Image a = load_pgm(p5.string()), b = load_pgm(p2.string());
    CHECK(a.pixels == b.pixels);
    CHECK(a.peak == b.peak);
    std::filesystem::remove(p5);
    std::filesystem::remove(p2);
}

TEST_CASE("load_pgm reports failure modes distinctly") {
    CHECK_THROWS_AS(load_pgm("/nonexistent/path/x.pgm"), pgm_io_error);

    auto trunc = temp_file("trunc.pgm");
    write_bytes(trunc, std::string("P5\n2 2\n255\n") + '\0' + '\xff' + '\x80');
    CHECK_THROWS_AS(load_pgm(trunc.string()), pgm_truncated_error);
    std::filesystem::remove(trunc);

    auto p2short = temp_file("trunc2.pgm");
    write_bytes(p2short, "P2\n2 2\n255\n0 255 128\n");
    CHECK_THROWS_AS(load_pgm(p2short.string()), pgm_truncated_error);
    std::filesystem::remove(p2short);

    auto bad = temp_file("bad.pgm");
    write_bytes(bad, "P6\n2 2\n255\nxxxx");
    CHECK_THROWS_AS(load_pgm(bad.string()), pgm_format_error);
    write_bytes(bad, "P5\n2 -2\n255\n");
    CHECK_THROWS_AS(load_pgm(bad.string()), pgm_format_error);
    write_bytes(bad, "P5\n2 2\n70000\n");
    CHECK_THROWS_AS(load_pgm(bad.string()), pgm_format_error);
    std::filesystem::remove(bad);
}

TEST_CASE("save_pgm clamps and rounds") {
    Image img(2, 2, 0.0, 255.0);
    img.pixels = {-3.2, 254.6, 127.4, 260.0};
    auto p = temp_file("clamp.pgm");
    save_pgm(img, p.string());
    Image back = load_pgm(p.string());
    CHECK(back.pixels == std::vector<double>{0, 255, 127, 255});
    std::filesystem::remove(p);
}

TEST_CASE("save/load round trip is exact for integral in-range images") {
    Image img = testsupport::random_image(13, 9, 7);
    for (auto& v : img.pixels) v = std::floor(v);
    auto p = temp_file("rt.pgm");
    save_pgm(img, p.string());
    Image once = load_pgm(p.string());
    CHECK(once.pixels == img.pixels);
    save_pgm(once, p.string());
    Image twice = load_pgm(p.string());
    CHECK(twice.pixels == once.pixels);  // idempotent after the first pass
    std::filesystem::remove(p);
}

TEST_CASE("16-bit PGM round trip") {
    Image img(3, 2, 0.0, 65535.0);
    img.pixels = {0, 65535, 300, 256, 255, 1000};
    auto p = temp_file("wide.pgm");
    save_pgm(img, p.string());
    Image back = load_pgm(p.string());
    CHECK(back.peak == 65535.0);
    CHECK(back.pixels == img.pixels);
    std::filesystem::remove(p);
}

TEST_CASE("add_awgn with sigma 0 is the identity") {
    Image img = testsupport::random_image(16, 16, 3);
    Image out = add_awgn(img, {0.0, 99});
    CHECK(out.pixels == img.pixels);
}

TEST_CASE("add_awgn is deterministic for a fixed seed") {
    Image img = testsupport::random_image(32, 24, 11);
    Image a = add_awgn(img, {15.0, 1234});
    Image b = add_awgn(img, {15.0, 1234});
    CHECK(a.pixels == b.pixels);
    Image c = add_awgn(img, {15.0, 1235});
    CHECK(a.pixels != c.pixels);
}

TEST_CASE("add_awgn sample moments are within Monte-Carlo bounds") {
    Image img(512, 512, 100.0);
    Image out = add_awgn(img, {20.0, 42});
    double mean = 0.0;
    for (std::size_t i = 0; i < out.pixels.size(); ++i) mean += out.pixels[i] - img.pixels[i];
    mean /= static_cast<double>(out.pixels.size());
    double var = 0.0;
    for (std::size_t i = 0; i < out.pixels.size(); ++i) {
        const double d = out.pixels[i] - img.pixels[i] - mean;
        var += d * d;
    }
    var /= static_cast<double>(out.pixels.size() - 1);
    CHECK(std::abs(mean) < 0.25);
    CHECK(std::sqrt(var) > 19.5);
    CHECK(std::sqrt(var) < 20.5);
}

TEST_CASE("add_awgn rejects negative sigma") {
    Image img(2, 2);
    CHECK_THROWS_AS(add_awgn(img, {-1.0, 0}), std::invalid_argument);
}

TEST_CASE("mse closed forms") {
    Image a(2, 1), b(2, 1);
    a.pixels = {0, 0};
    b.pixels = {3, 4};
    CHECK(mse(a, a) == 0.0);
    CHECK(mse(a, b) == Approx(12.5).margin(1e-15));

    Image c(4, 4, 10.0), d(4, 4, 11.0);
    CHECK(mse(c, d) == Approx(1.0).margin(1e-15));

    Image e(3, 4);
    CHECK_THROWS_AS(mse(a, e), std::invalid_argument);
}

TEST_CASE("mse is nonnegative, zero iff equal") {
    Image a = testsupport::random_image(9, 7, 21);
    Image b = testsupport::random_image(9, 7, 22);
    CHECK(mse(a, b) > 0.0);
    CHECK(mse(b, b) == 0.0);
}

TEST_CASE("psnr closed forms") {
    Image a(8, 8, 100.0);
    Image b = a;
    CHECK(std::isinf(psnr(a, b)));

    for (auto& v : b.pixels) v += 1.0;
    CHECK(psnr(a, b) == Approx(48.1308).margin(1e-3));  // 20*log10(255)

    Image c(8, 8, 0.0), d(8, 8, 255.0);
    CHECK(psnr(c, d) == Approx(0.0).margin(1e-12));
}

TEST_CASE("psnr is symmetric for same-peak images") {
    Image a = testsupport::random_image(17, 5, 31);
    Image b = testsupport::random_image(17, 5, 32);
    CHECK(psnr(a, b) == Approx(psnr(b, a)).margin(1e-12));
}
