// Copyright 2026 The Minimut Authors
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

#ifndef MINIMUT_TESTS_CORPUS_SUPPORT_H_
#define MINIMUT_TESTS_CORPUS_SUPPORT_H_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "minimut/executor/config.h"
#include "minimut/lang/project.h"
#include "minimut/mutagen/iterator.h"
#include "minimut/operators/catalog.h"

namespace minimut::testing {

inline const std::vector<std::string>& CorpusApps() {
  static const std::vector<std::string> kApps = {"counter", "notes", "share"};
  return kApps;
}

inline std::filesystem::path CorpusDir(const std::string& app) {
  return std::filesystem::path(MINIMUT_CORPUS_DIR) / app;
}

inline Project CorpusProject(const std::string& app) {
  return LoadProject(CorpusDir(app));
}

// All fourteen operators with the test module and support library excluded.
inline GenerationOptions CorpusOptions(const std::string& app,
                                       std::uint64_t seed = 42) {
  GenerationOptions options;
  options.operators = AllOperators();
  options.seed = seed;
  options.exclude = {app + "_test.mini", "lib/"};
  return options;
}

// The app's bundled config.json, writing to `output_dir` instead.
inline CampaignConfig CorpusConfig(const std::string& app,
                                   const std::filesystem::path& output_dir) {
  CampaignConfig config = LoadConfig(CorpusDir(app) / "config.json");
  config.output_dir = output_dir;
  return config;
}

// Fresh scratch directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("minimut-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace minimut::testing

#endif  // MINIMUT_TESTS_CORPUS_SUPPORT_H_
