// Copyright 2026 The surfdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("surfdec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }

    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }

    int run(const std::string &args) const {
        std::string cmd = std::string(SURFDEC_CLI) + " " + args + " > " + path("stdout.txt") + " 2> " +
                          path("stderr.txt");
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string read(const std::string &name) const {
        std::ifstream in(path(name), std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void write(const std::string &name, const std::string &text) const {
        std::ofstream(path(name), std::ios::binary) << text;
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, build_code) {
    ASSERT_EQ(run("build-code --distance 3 --out " + path("c3.json")), 0);
    EXPECT_EQ(nlohmann::json::parse(read("c3.json"))["checks"].size(), 4u);
    ASSERT_EQ(run("build-code --distance 5 --out " + path("c5.json")), 0);
    EXPECT_EQ(nlohmann::json::parse(read("c5.json"))["checks"].size(), 12u);
    EXPECT_EQ(run("build-code --distance 4 --out " + path("c4.json")), 1);
    EXPECT_NE(read("stderr.txt").find("odd"), std::string::npos);
}

TEST_F(Cli, manifest_lists_outputs_with_digests) {
    ASSERT_EQ(run("build-code --distance 3 --out " + path("c3.json")), 0);
    auto manifest = nlohmann::json::parse(read("c3.json.manifest.json"));
    EXPECT_EQ(manifest["command"], "build-code");
    EXPECT_EQ(manifest["argv"].size(), 6u);
    EXPECT_EQ(manifest["parameters"]["distance"], 3);
    ASSERT_EQ(manifest["outputs"].size(), 1u);
    EXPECT_EQ(manifest["outputs"][0]["sha256"].get<std::string>().size(), 64u);
    EXPECT_TRUE(manifest.contains("started_utc"));
    EXPECT_TRUE(manifest.contains("finished_utc"));
}

TEST_F(Cli, usage_errors) {
    EXPECT_EQ(run(""), 1);
    EXPECT_EQ(run("compare --distance 3"), 1);
    EXPECT_EQ(run("compare --distance 3 --mode sideways --out " + path("s.csv")), 1);
    EXPECT_EQ(run("compare --distance 3 --range 5 --out " + path("s.csv")), 1);
    EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, io_errors) {
    EXPECT_EQ(run("report --stats " + path("missing.csv") + " --venn " + path("v.json")), 2);
    write("bad.csv", "# surfdec-stats v1 distance=3 mode=exhaustive\nweight,total,colour\n");
    EXPECT_EQ(run("report --stats " + path("bad.csv") + " --venn " + path("v.json")), 2);
    EXPECT_EQ(run("build-code --distance 3 --out " + path("no/such/dir/c.json")), 2);
}

TEST_F(Cli, compare_d3_exhaustive) {
    ASSERT_EQ(run("compare --distance 3 --mode exhaustive --out " + path("s.csv") + " --json " + path("s.json")), 0);
    auto doc = nlohmann::json::parse(read("s.json"));
    EXPECT_EQ(doc["total_errors"], 512);
    auto manifest = nlohmann::json::parse(read("s.csv.manifest.json"));
    EXPECT_EQ(manifest["outputs"].size(), 2u);
    EXPECT_EQ(manifest["parameters"]["shard"]["hi"], 512);
}

TEST_F(Cli, shards_merge_to_full_run_in_any_order) {
    ASSERT_EQ(run("compare --distance 3 --out " + path("full.csv")), 0);
    ASSERT_EQ(run("compare --distance 3 --range 0:200 --out " + path("a.csv")), 0);
    ASSERT_EQ(run("compare --distance 3 --range 200:201 --out " + path("b.csv")), 0);
    ASSERT_EQ(run("compare --distance 3 --range 201:512 --out " + path("c.csv")), 0);
    ASSERT_EQ(run("merge-stats " + path("a.csv") + " " + path("b.csv") + " " + path("c.csv") + " --out " +
                  path("m1.csv")),
              0);
    ASSERT_EQ(run("merge-stats " + path("c.csv") + " " + path("a.csv") + " " + path("b.csv") + " --out " +
                  path("m2.csv")),
              0);
    EXPECT_EQ(read("m1.csv"), read("full.csv"));
    EXPECT_EQ(read("m2.csv"), read("full.csv"));
}

TEST_F(Cli, merge_rejects_mismatched_inputs) {
    ASSERT_EQ(run("compare --distance 3 --out " + path("d3.csv")), 0);
    ASSERT_EQ(run("compare --distance 5 --mode sample --samples 100 --out " + path("d5.csv")), 0);
    EXPECT_EQ(run("merge-stats " + path("d3.csv") + " " + path("d5.csv") + " --out " + path("m.csv")), 1);
}

TEST_F(Cli, report_outputs) {
    ASSERT_EQ(run("compare --distance 3 --out " + path("s.csv")), 0);
    ASSERT_EQ(run("report --stats " + path("s.csv") + " --venn " + path("v.json") + " --hist " + path("h.svg") +
                  " --ratio " + path("r.svg") + " --venn-svg " + path("vv.svg")),
              0);
    auto venn = nlohmann::json::parse(read("v.json"));
    EXPECT_EQ(venn.size(), 3u);
    EXPECT_TRUE(venn.contains("mwpm_only") && venn.contains("bposd_only") && venn.contains("both"));
    auto ratio = read("r.svg");
    EXPECT_NE(ratio.find(">MWPM<"), std::string::npos);
    EXPECT_NE(ratio.find(">BPOSD<"), std::string::npos);
    auto manifest = nlohmann::json::parse(read("v.json.manifest.json"));
    EXPECT_EQ(manifest["outputs"].size(), 4u);
}

TEST_F(Cli, report_on_empty_stats) {
    std::string csv = "# surfdec-stats v1 distance=3 mode=sampled\nweight,total,mwpm_only_fail,bposd_only_fail,both_fail\n";
    for (int w = 0; w <= 9; w++) {
        csv += std::to_string(w) + ",0,0,0,0\n";
    }
    write("empty.csv", csv);
    ASSERT_EQ(run("report --stats " + path("empty.csv") + " --venn " + path("v.json") + " --hist " + path("h.svg") +
                  " --ratio " + path("r.svg")),
              0);
    EXPECT_EQ(read("r.svg").find("<polyline"), std::string::npos);
    EXPECT_NE(read("r.svg").find("no data"), std::string::npos);
    EXPECT_NE(read("h.svg").find("no data"), std::string::npos);
    EXPECT_EQ(nlohmann::json::parse(read("v.json"))["both"], 0);
}

TEST_F(Cli, build_lut_round_trips) {
    ASSERT_EQ(run("build-lut --distance 3 --out " + path("l3.bin")), 0);
    auto bytes = read("l3.bin");
    EXPECT_EQ(bytes.substr(0, 8), "SURFDLUT");
    EXPECT_EQ(bytes.size(), 12u + 16u * 2u);
    EXPECT_EQ(run("build-lut --distance 9 --out " + path("l9.bin")), 1);
}

TEST_F(Cli, estimate_synthetic_times) {
    ASSERT_EQ(run("estimate --distances 5,7,9 --cores 362496 --t-mwpm 615.8 --t-bposd 781.1 --out " +
                  path("t.txt") + " --csv " + path("t.csv") + " --json " + path("t.json") + " --plot-dir " +
                  path("plots")),
              0);
    auto table = read("t.txt");
    EXPECT_NE(table.find("Nr. errors"), std::string::npos);
    EXPECT_NE(table.find("33554432"), std::string::npos);
    EXPECT_NE(table.find("5.70e-02"), std::string::npos);
    EXPECT_NE(table.find("2.4179e+24"), std::string::npos);
    EXPECT_EQ(read("stdout.txt"), table);
    EXPECT_TRUE(fs::exists(path("plots/core_scaling_d7.svg")));
    auto doc = nlohmann::json::parse(read("t.json"));
    EXPECT_EQ(doc["projection"].size(), 6u);
    EXPECT_EQ(run("estimate --t-mwpm 1.0 --out " + path("x.txt")), 1);
}

TEST_F(Cli, estimate_measures) {
    ASSERT_EQ(run("estimate --distance 3 --samples 2000 --low-samples 200 --json " + path("m.json")), 0);
    auto doc = nlohmann::json::parse(read("m.json"));
    ASSERT_EQ(doc["measured"].size(), 1u);
    EXPECT_GT(doc["measured"][0]["seconds_per_million"]["mwpm"].get<double>(), 0);
}

TEST_F(Cli, threshold_outputs) {
    ASSERT_EQ(run("threshold --decoder mwpm --distances 3,5 --p-grid 0.06:0.16:0.02 --shots 2000 --out " +
                  path("th.csv") + " --plot " + path("th.svg") + " --json " + path("th.json") + " --workers 2"),
              0);
    auto csv = read("th.csv");
    EXPECT_EQ(csv.rfind("# surfdec-threshold v1 decoder=mwpm seed=1 workers=2\ndistance,p,shots,failures,rate,lo,hi\n", 0),
              0u);
    EXPECT_NE(csv.find("\n3,0.1,2000,"), std::string::npos);
    EXPECT_NE(csv.find("\n5,0.16,2000,"), std::string::npos);
    auto summary = nlohmann::json::parse(read("th.json"));
    EXPECT_TRUE(summary.contains("found"));
    EXPECT_EQ(run("threshold --decoder nope --out " + path("x.csv")), 1);
    EXPECT_EQ(run("threshold --p-grid 0.1:0.05:0.01 --out " + path("x.csv")), 1);
}

TEST_F(Cli, identical_arguments_give_identical_outputs) {
    for (int i = 0; i < 2; i++) {
        auto tag = std::to_string(i);
        ASSERT_EQ(run("compare --distance 5 --mode sample --samples 20000 --seed 4 --workers 2 --out " +
                      path("s" + tag + ".csv") + " --json " + path("s" + tag + ".json")),
                  0);
        ASSERT_EQ(run("report --stats " + path("s" + tag + ".csv") + " --ratio " + path("r" + tag + ".svg")), 0);
    }
    EXPECT_EQ(read("s0.csv"), read("s1.csv"));
    EXPECT_EQ(read("s0.json"), read("s1.json"));
    EXPECT_EQ(read("r0.svg"), read("r1.svg"));
}
