/* Copyright 2026 The sotadc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SOTADC_CONFIG_HPP
#define SOTADC_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sotadc {

/// Flat key=value configuration file. '#' starts a comment; blank lines are
/// ignored; duplicate keys are rejected. Parsing is strict: a command must
/// consume every key it accepts and then call reject_unknown(), so a typo
/// never silently falls back to a default.
class KvConfig {
  public:
    static KvConfig from_file(const std::filesystem::path& path);
    static KvConfig from_string(const std::string& text,
                                const std::string& path_label);
    KvConfig() = default;

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key,
                           const std::string& fallback);
    double get_double(const std::string& key, double fallback);
    std::int64_t get_int(const std::string& key, std::int64_t fallback);
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback);

    /// Throws ParseError listing any keys never consumed by a getter.
    void reject_unknown() const;

  private:
    struct Entry {
        int line = 0;
        std::string value;
        bool consumed = false;
    };

    std::string path_;
    std::map<std::string, Entry> entries_;

    Entry* find(const std::string& key);
    [[noreturn]] void fail(const Entry& entry, const std::string& key,
                           const std::string& what) const;
};

} // namespace sotadc

#endif
