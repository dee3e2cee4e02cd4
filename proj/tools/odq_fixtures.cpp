// Writes the synthetic fixture tables as CSV files into a directory.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "fixtures.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic fixture CSV files"};
  std::string dir = "fixtures";
  bool small = false;
  app.add_option("dir", dir, "Output directory");
  app.add_flag("--small", small, "Skip the large register table");
  CLI11_PARSE(app, argc, argv);

  namespace fx = odq::fixtures;
  std::filesystem::create_directories(dir);
  const std::filesystem::path out(dir);
  try {
    fx::save(fx::licences_dataset(), out / "licences.csv");
    fx::save(fx::communication_dataset(), out / "communication.csv");
    fx::save(fx::gis_dataset(), out / "government_is.csv");
    fx::save(fx::topicgroup_dataset(), out / "topicgroup.csv");
    fx::save(fx::termination_dataset(), out / "termination.csv");
    fx::save(fx::nullability_dataset(), out / "nullability.csv");
    if (!small) fx::save(fx::register_dataset(), out / "register.csv");
  } catch (const std::exception& e) {
    std::cerr << "odq_fixtures: " << e.what() << "\n";
    return 1;
  }
  std::cout << "fixtures written to " << out.string() << "\n";
  return 0;
}
