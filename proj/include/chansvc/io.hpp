// chansvc - service-rate analysis and simulation for i.i.d. fading channels
// Copyright (C) 2026 the chansvc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CHANSVC_IO_HPP
#define CHANSVC_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

namespace chansvc {

// Shortest representation that round-trips to the same double.
std::string format_double(double value);

// Write via a temp file in the same directory and rename into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace chansvc

#endif
