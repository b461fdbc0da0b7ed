#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ctc/abp.hpp"
#include "ctc/equivalence.hpp"
#include "ctc/errors.hpp"
#include "ctc/semantics.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(CTC_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ctc_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ParseValid) {
  auto f = file("ok.ctc", "# two constants\nA = a.B;\nB = ('b || c).A + tau.nil;\n");
  auto r = run("parse " + f);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "A = a.B;\nB = ('b || c).A + tau.nil;\n");
}

TEST_F(Cli, ParseSyntaxError) {
  auto r = run("parse " + file("bad.ctc", "A = a.nil;\nB = (a || .nil;\n"));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out.rfind("error: 2:", 0), 0u) << r.out;
}

TEST_F(Cli, ParseUnguarded) {
  auto r = run("parse " + file("ug.ctc", "A = A + a.nil;\n"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("not weakly guarded"), std::string::npos) << r.out;
}

TEST_F(Cli, Lts) {
  auto f = file("e.ctc", "");
  auto r = run("lts " + f + " \"a.nil || b.nil\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "state 0 a.nil || b.nil\nstate 1 nil || nil\ntrans 0 a,b 1\n");
  auto n = run("lts " + f + " nil --format dot");
  EXPECT_EQ(n.code, 0);
  EXPECT_NE(n.out.find("digraph"), std::string::npos);
  EXPECT_EQ(n.out.find("->"), std::string::npos);
  auto s = run("lts " + f + " nil --format struct");
  EXPECT_NE(s.out.find("\"transitions\": []"), std::string::npos) << s.out;
}

TEST_F(Cli, LtsBound) {
  auto f = file("ch.ctc", "Trans = 'x.nil + tau.(Trans || x.nil);\n");
  auto r = run("lts " + f + " Trans --max-states 100");
  EXPECT_EQ(r.code, 3) << r.out;
}

TEST_F(Cli, LtsBoundFromEnvironment) {
  auto f = file("ch.ctc", "Trans = 'x.nil + tau.(Trans || x.nil);\n");
  EXPECT_EQ(run("lts " + f + " Trans", "CTC_MAX_STATES=50").code, 3);
  EXPECT_EQ(run("lts " + f + " Trans", "CTC_MAX_STATES=lots").code, 2);
}

TEST_F(Cli, Equiv) {
  auto f = file("e.ctc", "");
  auto m = run("equiv " + f + " \"a.nil || b.nil\" \"a.b.nil + b.a.nil\" --kind step --strength strong");
  EXPECT_EQ(m.code, 1);
  EXPECT_NE(m.out.find("left {a,b}"), std::string::npos) << m.out;
  auto t = run("equiv " + f + " tau.a.nil a.nil --kind step --strength weak");
  EXPECT_EQ(t.code, 0) << t.out;
  auto p = run("equiv " + f + " \"a.(b.nil || c.nil)\" \"a.(b.nil || c.nil)\" --kind hp --strength strong --depth 4");
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("depth 4"), std::string::npos);
}

TEST_F(Cli, InputErrors) {
  auto f = file("e.ctc", "A = a.A;\n");
  EXPECT_EQ(run("equiv " + f + " A B --kind step").code, 2);
  EXPECT_EQ(run("equiv " + f + " A A --kind bisim").code, 2);
  EXPECT_EQ(run("parse " + (dir_ / "missing.ctc").string()).code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("abp --capacity 0").code, 2);
  EXPECT_EQ(run("laws --count 0").code, 2);
}

TEST_F(Cli, LawsDeterministicAndLabelled) {
  const std::string args = "laws --seed 3 --count 2 --depth 2 --kinds hhp --check-depth 3";
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
  EXPECT_NE(a.out.find("at depth 3"), std::string::npos) << a.out;
}

TEST_F(Cli, ExportsDeterministic) {
  auto f = file("d.ctc", "A = (a || b).A + 'c.tau.A;\n");
  for (const char* fmt : {"text", "dot", "struct"}) {
    auto a = run("lts " + f + " A --format " + fmt), b = run("lts " + f + " A --format " + fmt);
    EXPECT_EQ(a.out, b.out);
  }
  EXPECT_EQ(run("unfold " + f + " A --depth 3").out, run("unfold " + f + " A --depth 3").out);
}

TEST(Abp, Model) {
  EXPECT_THROW(ctc::make_abp(0), ctc::InvalidArgument);
  auto m = ctc::make_abp(1);
  for (const char* n : {"Send_0", "Sending_1", "AcceptS_0", "DeliverS_1", "Reply_0", "Replying_1", "DeliverR_0",
                        "AcceptR_1", "Timer", "Trans_e", "Trans_0", "Trans_1", "Ack_e", "Ack_1", "AB", "Buff"})
    EXPECT_TRUE(m.env.contains(ctc::Symbol(n))) << n;
  // no channel state beyond the capacity
  EXPECT_FALSE(m.env.contains(ctc::Symbol("Trans_00")));
  EXPECT_TRUE(ctc::make_abp(2).env.contains(ctc::Symbol("Trans_01")));
}

TEST(Abp, StrongStepInequivalent) {
  auto m = ctc::make_abp(1);
  auto r = ctc::step_bisim(m.system, m.spec, m.env, ctc::Strength::Strong);
  EXPECT_FALSE(r.equivalent);
  EXPECT_LE(ctc::saturate_weak(ctc::build_lts(m.system, m.env)).num_states(), 10000u);
}
