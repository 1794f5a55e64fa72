#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <hexforce/cli.hpp>
#include <hexforce/hexgrid.hpp>

namespace fs = std::filesystem;
using hexforce::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("hexforce_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("gen then cf") {
  TempDir dir;
  Result g = call({"gen", "parallelogram", "-p", "2", "-q", "2", "-o", dir / "p22.hex"});
  REQUIRE(g.code == 0);
  Result c = call({"cf", dir / "p22.hex", "-o", dir / "w.edges"});
  CHECK(c.code == 0);
  CHECK(c.out == "cf = 5\n");
  hexforce::HexSystem hs = hexforce::parse_hexsys(slurp(dir / "p22.hex"));
  CHECK(hexforce::parse_edge_set(hs, slurp(dir / "w.edges")).size() == 5);

  // identical invocations give identical bytes
  Result again = call({"cf", dir / "p22.hex"});
  Result twice = call({"cf", dir / "p22.hex"});
  CHECK(again.out == twice.out);
  CHECK(again.out.rfind("cf = 5\n", 0) == 0);
}

TEST_CASE("construct then verify") {
  TempDir dir;
  REQUIRE(call({"gen", "hexagon", "-p", "2", "-o", dir / "h2.hex"}).code == 0);
  REQUIRE(call({"construct", "hexagon", "-p", "2", "-o", dir / "s.edges"}).code == 0);
  Result v = call({"verify", dir / "h2.hex", "--set", dir / "s.edges", "--oracle"});
  CHECK(v.code == 0);
  CHECK(v.out == "PASS\n");
  Result cuts = call({"construct", "hexagon", "-p", "2", "--cuts"});
  CHECK(cuts.code == 0);
  CHECK(cuts.out.find("\n\n") != std::string::npos);
}

TEST_CASE("verify reports a counterexample frame") {
  TempDir dir;
  std::ofstream(dir / "hex1.hex") << "HEXSYS 1\n0 0\n";
  std::ofstream(dir / "empty.edges") << "";
  Result v = call({"verify", dir / "hex1.hex", "--set", dir / "empty.edges"});
  CHECK(v.code == 1);
  CHECK(v.out.rfind("FAIL\n", 0) == 0);
  hexforce::HexSystem hs = hexforce::parse_hexsys("HEXSYS 1\n0 0\n");
  std::string frame = v.out.substr(v.out.find(":\n") + 2);
  hexforce::EdgeSet f = hexforce::parse_edge_set(hs, frame);
  auto [a, b] = hexforce::hexagon_frames(hs, 0);
  CHECK((f == a || f == b));
}

TEST_CASE("bounds, certify, decompose and viz") {
  TempDir dir;
  REQUIRE(call({"gen", "prolate", "-p", "3", "-q", "2", "-o", dir / "r.hex"}).code == 0);
  Result b = call({"bounds", dir / "r.hex"});
  CHECK(b.code == 0);
  CHECK(b.out.find("normal = no") != std::string::npos);

  Result c = call({"certify", "oblate", "-p", "3", "-q", "2"});
  CHECK(c.code == 0);
  CHECK(c.out.find("verdict = OPTIMAL") != std::string::npos);

  Result d = call({"decompose", dir / "r.hex", "-o", dir / "comp"});
  CHECK(d.code == 0);
  CHECK(fs::exists(dir / "comp_1.hex"));
  CHECK(fs::exists(dir / "comp_2.hex"));
  CHECK(hexforce::parse_hexsys(slurp(dir / "comp_1.hex")).num_hexagons() == 2);

  REQUIRE(call({"construct", "prolate", "-p", "3", "-q", "2", "-o", dir / "s.edges"}).code == 0);
  Result v = call({"viz", dir / "r.hex", "--set", dir / "s.edges", "--svg", dir / "r.svg", "--dot",
                   dir / "r.dot"});
  CHECK(v.code == 0);
  std::string svg = slurp(dir / "r.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("#d62728") != std::string::npos);
  std::string dot = slurp(dir / "r.dot");
  CHECK(dot.rfind("graph dual {", 0) == 0);
}

TEST_CASE("exit codes for bad input and limits") {
  TempDir dir;
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"gen", "oblate", "-p", "2", "-q", "2"}).code == 2);
  CHECK(call({"cf", dir / "missing.hex"}).code == 2);
  std::ofstream(dir / "bad.hex") << "HEXSYS 1\n1 0\n";
  CHECK(call({"cf", dir / "bad.hex"}).code == 2);
  REQUIRE(call({"gen", "hexagon", "-p", "3", "-o", dir / "h3.hex"}).code == 0);
  Result big = call({"cf", dir / "h3.hex"});
  CHECK(big.code == 3);
  CHECK(big.err.find("limit") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}
