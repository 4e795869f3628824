// Runs the acceptance suites (all of them, or the ids given as arguments)
// and prints one verdict line per criterion. Exit status is the number of
// failing criteria (capped at 125).
#include <cstdio>
#include <string>
#include <vector>

#include "bsy/verify/suites.hpp"

namespace {

std::string details(const bsy::verify::SuiteResult& r) {
  if (!r.error.empty()) return "error: " + r.error_kind + ": " + r.error;
  std::string out;
  char buf[256];
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%s%s = %.6g (limit %.6g)%s", out.empty() ? "" : "; ",
                  c.name.c_str(), c.measured, c.threshold,
                  c.informational ? " [info]" : (c.pass ? "" : " [FAILED]"));
    out += buf;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> ids(argv + 1, argv + argc);
  if (ids.empty()) ids = bsy::verify::suite_ids();
  bsy::verify::SuiteContext ctx;
  int failures = 0;
  int index = 0;
  for (const auto& id : ids) {
    const auto r = bsy::verify::run_suite(id, ctx);
    ++index;
    if (!r.pass) ++failures;
    std::printf("%s %2d %-20s measured=%.17g threshold=%.17g time=%.1fs | %s\n",
                r.pass ? "PASS" : "FAIL", index, id.c_str(), r.measured, r.threshold, r.seconds,
                details(r).c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures > 125 ? 125 : failures;
}
