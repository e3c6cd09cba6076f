#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "eisenhecke/workbench/fixtures.hpp"

using namespace eisen;
namespace fs = std::filesystem;

namespace {

const FixtureSet& fixtures() {
    static const FixtureSet F = load_fixtures();
    return F;
}

const ChecksumItem& item(const ChecksumReport& r, const std::string& name) {
    for (const auto& c : r.items)
        if (c.name == name) return c;
    throw std::runtime_error("no check " + name);
}

fs::path copy_fixtures(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("eisenhecke_fixtures_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& e : fs::directory_iterator(fixture_dir())) fs::copy_file(e.path(), dir / e.path().filename());
    return dir;
}

}  // namespace

TEST(Fixtures, ChecksumsPass) {
    auto r = fixture_checksum(fixtures());
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.items.size(), 8u);
    for (const auto& c : r.items) EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
}

TEST(Fixtures, ShapesAndRowSums) {
    const auto& F = fixtures();
    EXPECT_EQ(F.t2.size(), 20u);
    EXPECT_EQ(F.t3.size(), 20u);
    EXPECT_EQ(F.t2_5x5.size(), 5u);
    EXPECT_EQ(*F.t2.row_sum(), 5593770);
    EXPECT_EQ(*F.t3.row_sum(), 266448);
    EXPECT_EQ(F.table.rows.size(), 20u);
    EXPECT_EQ(F.proved.size(), 16u);
}

TEST(Fixtures, CorruptedDigitIsLocated) {
    FixtureSet F = fixtures();
    F.t2.entries(6, 3) += 10;
    auto r = fixture_checksum(F);
    EXPECT_FALSE(r.ok());
    const auto& c = item(r, "T2 row sums");
    EXPECT_FALSE(c.ok);
    EXPECT_NE(c.detail.find("row 7 sums to 5593780"), std::string::npos) << c.detail;
    EXPECT_FALSE(item(r, "T2 T3 = T3 T2").ok);
    EXPECT_TRUE(item(r, "T3 row sums").ok);
}

TEST(Fixtures, CorruptedSPrimeIsLocated) {
    FixtureSet F = fixtures();
    F.sprime2(11, 0) += 1;
    auto r = fixture_checksum(F);
    const auto& c = item(r, "S' row sums");
    EXPECT_FALSE(c.ok);
    EXPECT_NE(c.detail.find("row 12"), std::string::npos);
}

TEST(Fixtures, EnvironmentOverride) {
    auto dir = copy_fixtures("env");
    // change one file in the copy and point the loader at it
    auto j = read_json((dir / "t3_unimodular.json").string());
    auto& row = j["rows"][0];
    row[0] = row[0].get<long>() + 1;
    write_json(j, (dir / "t3_unimodular.json").string());
    ::setenv("EISENHECKE_FIXTURES", dir.c_str(), 1);
    EXPECT_EQ(fixture_dir(), dir.string());
    auto F = load_fixtures();
    ::unsetenv("EISENHECKE_FIXTURES");
    EXPECT_FALSE(item(fixture_checksum(F), "T3 row sums").ok);
    EXPECT_NE(fixture_dir(), dir.string());
    fs::remove_all(dir);
}

TEST(Fixtures, MissingDirectoryRaises) {
    EXPECT_THROW(load_fixtures("/nonexistent/eisenhecke"), PreconditionError);
}

TEST(Fixtures, PermutationByAutomorphismOrders) {
    const auto& F = fixtures();
    std::vector<size_t> shuffle{3, 0, 4, 1, 2};
    // class i of the shuffled matrix is class shuffle[i] of the fixture
    std::vector<size_t> inverse(5);
    for (size_t i = 0; i < 5; ++i) inverse[shuffle[i]] = i;
    HeckeMatrix T = permute_classes(F.t2_5x5, inverse);
    std::vector<Integer> aut(5);
    for (size_t i = 0; i < 5; ++i) aut[i] = F.aut_L[shuffle[i]];
    auto perm = permutation_by_aut_orders(aut, F.aut_L);
    EXPECT_EQ(perm, shuffle);
    EXPECT_EQ(permute_classes(T, perm).entries, F.t2_5x5.entries);
    std::vector<Integer> repeated = F.aut_L;
    repeated[1] = repeated[0];
    EXPECT_THROW(permutation_by_aut_orders(repeated, repeated), UnsupportedCaseError);
}
