#include <sstream>

#include "cantor/error.hpp"
#include "cantor/pgm.hpp"
#include "doctest.h"

using namespace cantor;

TEST_SUITE("pgm") {

TEST_CASE("round trip and exact header") {
  Mask m(5, 3);
  m.set(0, 0, true);
  m.set(2, 4, true);
  std::ostringstream out;
  write_pgm(out, m);
  const std::string bytes = out.str();
  CHECK(bytes.rfind("P5\n5 3\n255\n", 0) == 0);
  CHECK(bytes.size() == 11 + 15);
  CHECK(static_cast<unsigned char>(bytes[11]) == 0);
  CHECK(static_cast<unsigned char>(bytes[12]) == 255);

  std::istringstream in(bytes);
  const Mask back = read_pgm(in);
  CHECK(back.width == 5);
  CHECK(back.height == 3);
  CHECK(back.bits == m.bits);
}

TEST_CASE("malformed input") {
  std::istringstream wrong("P2\n1 1\n255\n0");
  CHECK_THROWS_AS(read_pgm(wrong), Error);
  std::istringstream short_data("P5\n4 4\n255\nab");
  CHECK_THROWS_AS(read_pgm(short_data), Error);
  const std::string text = "P5\n# made by hand\n2 1\n255\n";
  std::istringstream comment(text + std::string{'\0', '\xff'});
  CHECK(read_pgm(comment).count() == 1);
}

}
