#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "stanley/stanley.hpp"

using namespace stanley;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Appendix, DataFilesMatchEmbeddedCopies) {
  EXPECT_EQ(slurp(STANLEY_DATA_DIR "/appendix_mod28.txt"), appendix_data::mod28);
  EXPECT_EQ(slurp(STANLEY_DATA_DIR "/appendix_mod30.txt"), appendix_data::mod30);
}

TEST(Appendix, BandsAndRowCount) {
  const auto m28 = load_appendix_mod28();
  const auto m30 = load_appendix_mod30();
  std::vector<value_t> keys28, keys30, want28, want30;
  for (const auto& [k, row] : m28.rows) keys28.push_back(k);
  for (const auto& [k, row] : m30.rows) keys30.push_back(k);
  for (value_t t = 57; t <= 83; ++t)
    if (t != 70) want28.push_back(t);
  for (value_t t = 46; t <= 74; ++t)
    if (t != 60) want30.push_back(t);
  EXPECT_EQ(keys28, want28);
  EXPECT_EQ(keys30, want30);
  EXPECT_EQ(m28.rows.size() + m30.rows.size(), 54u);
}

TEST(Appendix, EveryRowVerifiesAndSurvivesShifting) {
  for (const auto& table : {load_appendix_mod28(), load_appendix_mod30()})
    for (const auto& [max, row] : table.rows) {
      ASSERT_TRUE(row.usable()) << max;
      EXPECT_EQ(row.set->modulus(), table.modulus);
      EXPECT_EQ(row.set->max(), max);
      EXPECT_EQ(row.set->size(), 8u);
      EXPECT_TRUE(verify(*row.set).is_near_modular);
      EXPECT_TRUE(verify(shift_max(*row.set, 1)).is_near_modular);
      if (row.status == row_status::verified) {
        EXPECT_EQ(format_set(*row.set), row.printed);
      }
    }
}

TEST(Appendix, MalformedRowIsRepairedAndIsTheOnlyErratum) {
  const auto m28 = load_appendix_mod28();
  const auto m30 = load_appendix_mod30();
  EXPECT_TRUE(m30.errata().empty());
  const auto errata = m28.errata();
  ASSERT_EQ(errata.size(), 1u);
  EXPECT_EQ(errata[0]->max_element, 61u);
  EXPECT_EQ(errata[0]->status, row_status::repaired);
  EXPECT_EQ(*errata[0]->set, ResidueSet(28, {0, 11, 13, 18, 24, 29, 44, 61}));
}

TEST(Appendix, UnverifiableRowFallsBackToSearch) {
  // Same shape as a real row but with one element moved so it fails.
  const auto t = load_appendix_table("N=28; 0,5,11,13,16,18,25,57\n", 28);
  const auto& row = t.rows.at(57);
  EXPECT_EQ(row.status, row_status::replaced);
  ASSERT_TRUE(row.usable());
  EXPECT_TRUE(verify(*row.set).is_near_modular);
  EXPECT_EQ(row.set->max(), 57u);

  AppendixLoadOptions starved;
  starved.replacement_budget = 10;
  const auto q = load_appendix_table("N=28; 0,5,11,13,16,18,25,57\n", 28, starved);
  EXPECT_EQ(q.rows.at(57).status, row_status::quarantined);
  EXPECT_FALSE(q.rows.at(57).usable());
  EXPECT_EQ(q.row_congruent_to(57), nullptr);
}

TEST(Appendix, WrongModulusIsRejected) {
  EXPECT_THROW((void)load_appendix_table("N=30; 0,7,9,10,17,19,26,46\n", 28), error);
}
