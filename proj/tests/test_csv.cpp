#include <doctest.h>

#include <random>
#include <sstream>

#include "scitrade/csv.hpp"

using namespace scitrade;

TEST_CASE("split_line handles plain and quoted fields") {
  CHECK(csv::split_line("a,b,c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(csv::split_line("a,,c") == std::vector<std::string>{"a", "", "c"});
  CHECK(csv::split_line("\"MEDICINE, GENERAL & INTERNAL\",1.73") ==
        std::vector<std::string>{"MEDICINE, GENERAL & INTERNAL", "1.73"});
  CHECK(csv::split_line("\"a\"\"b\",c") == std::vector<std::string>{"a\"b", "c"});
}

TEST_CASE("escape quotes only when needed") {
  CHECK(csv::escape("plain") == "plain");
  CHECK(csv::escape("has,comma") == "\"has,comma\"");
  CHECK(csv::escape("has\"quote") == "\"has\"\"quote\"");
}

TEST_CASE("join/split round-trips arbitrary tokens") {
  std::mt19937_64 rng(1234);
  const std::string alphabet = "ab,\"& x";
  std::uniform_int_distribution<std::size_t> len(0, 8);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<std::string> fields(1 + iter % 4);
    for (auto& f : fields) {
      const std::size_t k = len(rng);
      for (std::size_t i = 0; i < k; ++i) f.push_back(alphabet[pick(rng)]);
    }
    CHECK(csv::split_line(csv::join(fields)) == fields);
  }
}

TEST_CASE("reader skips comments and counts lines") {
  std::istringstream in("# seed=42\n\na,b\n1,2\r\n# trailing\n3,4\n");
  csv::Reader reader(in);
  std::vector<std::string> fields;
  REQUIRE(reader.next(fields));
  CHECK(fields == std::vector<std::string>{"a", "b"});
  CHECK(reader.line_number() == 3);
  REQUIRE(reader.next(fields));
  CHECK(fields == std::vector<std::string>{"1", "2"});
  CHECK(reader.line_number() == 4);
  REQUIRE(reader.next(fields));
  CHECK(fields == std::vector<std::string>{"3", "4"});
  CHECK(reader.line_number() == 6);
  CHECK_FALSE(reader.next(fields));
}

TEST_CASE("format_double renders 6 significant digits") {
  CHECK(csv::format_double(1.730612) == "1.73061");
  CHECK(csv::format_double(0.5) == "0.5");
  CHECK(csv::format_double(1681.0) == "1681");
  CHECK(csv::format_double(0.000123456789) == "0.000123457");
  CHECK(csv::round_sig6(1.730612) == doctest::Approx(1.73061).epsilon(1e-12));
}
