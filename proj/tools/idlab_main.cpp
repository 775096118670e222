// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <iostream>

#include "idlab/cli.hpp"

int main(int argc, char** argv) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> args(argv + 1, argv + argc);
  idlab::cli::RunResult result = idlab::cli::run(args);
  if (!result.message.empty()) {
    (result.exit_code == 0 ? std::cout : std::cerr) << result.message << std::endl;
  }
  if (!result.report_path.empty()) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    // Wall time stays out of the report file so reruns are byte-identical.
    std::cerr << "report: " << result.report_path << " verdict: " << result.report.at("verdict").get<std::string>()
              << " wall_ms: " << ms.count() << std::endl;
  }
  return result.exit_code;
}
