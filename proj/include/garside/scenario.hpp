#ifndef GARSIDE_SCENARIO_HPP_
#define GARSIDE_SCENARIO_HPP_

#include <string>
#include <vector>

namespace garside {

  struct Check {
    std::string id;
    std::string description;
    std::string expected;
    std::string actual;
    bool        pass = false;
    double      elapsed_ms = 0;
  };

  struct VerificationReport {
    std::string        scenario;
    std::vector<Check> checks;  // sorted by id

    bool pass() const;
  };

  // Directory holding g12.gar, g13.gar and exceptional.txt: $GARSIDE_DATA_DIR
  // if set, otherwise the directory configured at build time.
  std::string data_directory();

  std::vector<std::string> const& scenario_names();

  // One of scenario_names(). Throws InputError for an unknown name or a
  // missing data file, before any check runs.
  VerificationReport run_scenario(std::string const& name,
                                  std::string const& data_dir = data_directory());

}  // namespace garside

#endif  // GARSIDE_SCENARIO_HPP_
