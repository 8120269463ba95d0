// Copyright 2026 The metabraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "metabraid/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>

namespace mb = metabraid;
namespace fs = std::filesystem;

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(mb::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(mb::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Sha256, FileMatchesBytes) {
  const auto p = fs::temp_directory_path() / "metabraid_sha_test.bin";
  const std::string bytes("a,b\n1,\"x\"\n\0tail", 16);
  std::ofstream(p, std::ios::binary) << bytes;
  EXPECT_EQ(mb::sha256_file(p.string()), mb::sha256_hex(bytes));
  fs::remove(p);
  EXPECT_THROW(mb::sha256_file(p.string()), std::runtime_error);
}

TEST(Csv, QuotingFollowsRfc4180) {
  mb::CsvTable t({"a", "b"});
  t.add_row({"plain", "has,comma"});
  t.add_row({"say \"hi\"", "two\nlines"});
  EXPECT_EQ(t.to_string(), "a,b\nplain,\"has,comma\"\n\"say \"\"hi\"\"\",\"two\nlines\"\n");
  EXPECT_EQ(t.at(1, "a"), "say \"hi\"");
  EXPECT_THROW(t.column("c"), std::out_of_range);
  EXPECT_THROW(t.add_row({"too", "many", "cells"}), std::invalid_argument);
}

TEST(Manifest, RecordsOutputsAndDigests) {
  const auto dir = fs::temp_directory_path() / "metabraid_manifest_test";
  fs::create_directories(dir);
  const auto csv = dir / "t.csv";
  mb::CsvTable t({"x"});
  t.add_row({"1"});
  t.write(csv.string());

  mb::RunManifest m;
  m.command_line = "metabraid reproduce table2";
  m.seed = 5;
  m.backend = "bigfloat:256";
  m.add_output(csv.string());
  const auto j = m.to_json();
  EXPECT_EQ(j.at("seed"), 5);
  EXPECT_EQ(j.at("backend"), "bigfloat:256");
  EXPECT_EQ(j.at("version"), mb::code_version());
  EXPECT_TRUE(std::regex_match(j.at("timestamp").get<std::string>(),
                               std::regex(R"(\d{4}-\d\d-\d\dT\d\d:\d\d:\d\dZ)")));
  ASSERT_EQ(j.at("outputs").size(), 1u);
  EXPECT_EQ(j.at("outputs")[0].at("sha256"), mb::sha256_hex("x\n1\n"));

  const auto mp = dir / "t.manifest.json";
  m.write(mp.string());
  std::ifstream in(mp);
  const auto back = mb::Json::parse(in);
  EXPECT_EQ(back, j);
  fs::remove_all(dir);
}

TEST(Reference, Lookups) {
  EXPECT_EQ(mb::table1_reference().size(), 3u);
  EXPECT_EQ(mb::reference_min_distance(false, "V113_3", 3), 5.0);
  EXPECT_NEAR(*mb::reference_min_distance(false, "V331_1", 11), 3.11e-3, 1e-18);
  EXPECT_NEAR(*mb::reference_min_distance(true, "V313_1", 6), 5.00e-5, 1e-18);
  EXPECT_FALSE(mb::reference_min_distance(false, "V113_3", 14));
  EXPECT_FALSE(mb::reference_min_distance(true, "V113_3", 8));
  EXPECT_FALSE(mb::reference_min_distance(true, "V113_3", 2));
  EXPECT_FALSE(mb::reference_min_distance(true, "fibonacci", 4));
  EXPECT_EQ(mb::reference_phase_class("V131_3"), "same");
  EXPECT_FALSE(mb::reference_phase_class("V331_1"));
}

TEST(Reference, Agreement) {
  EXPECT_TRUE(mb::reference_agrees(1e-40, 1.23e-32));
  EXPECT_TRUE(mb::reference_agrees(5.0, 5.0));
  EXPECT_TRUE(mb::reference_agrees(3.10e-3, 3.11e-3));
  EXPECT_FALSE(mb::reference_agrees(3.0e-3, 3.11e-3));
  EXPECT_FALSE(mb::reference_agrees(1e-20, 1.23e-32));
}

TEST(Verify, InverseCancelsToIdentityDistance) {
  mb::EbmSource src{"V113_3", mb::Arity::two_qubit, mb::EbmVariant::derived, std::nullopt};
  const auto rep = mb::verify_word(src, "AF", mb::Objective::cnot(mb::Backend::big(128)));
  ASSERT_EQ(rep.orders.size(), 2u);
  for (const auto& e : rep.orders) {
    EXPECT_NEAR(std::stod(e.distance), 5.0, 1e-30);
    EXPECT_TRUE(e.admissible);
    EXPECT_FALSE(e.numerically_zero);
  }
  EXPECT_EQ(rep.to_json().at("word"), "AF");
  EXPECT_NE(rep.to_text().find("unitarity defect"), std::string::npos);
  EXPECT_THROW(mb::verify_word(src, "AZ", mb::Objective::cnot()), std::invalid_argument);
}

TEST(Reproduce, Table2MatchesReference) {
  const auto rep = mb::run_table("table2", {});
  ASSERT_EQ(rep.table.rows().size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(rep.table.at(i, "agrees"), "true");
  EXPECT_THROW(mb::run_table("table9", {}), std::invalid_argument);
}

TEST(Reproduce, SmallTable3RespectsBudget) {
  mb::TableOptions opt;
  opt.backend = mb::Backend::big(128);
  opt.models = {"V113_3"};
  opt.max_length = 5;
  opt.node_budget = 5 * 5 * 5 + 625;
  const auto rep = mb::run_table("table3", opt);
  ASSERT_EQ(rep.table.rows().size(), 3u);
  EXPECT_EQ(rep.table.at(0, "truncated"), "false");
  EXPECT_EQ(rep.table.at(0, "words"), "125");
  EXPECT_EQ(rep.table.at(0, "agrees"), "true");
  EXPECT_EQ(rep.table.at(2, "truncated"), "true");
  EXPECT_TRUE(rep.truncated);
  EXPECT_EQ(rep.table.header()[3], "min_distance_bigfloat:128");
}
