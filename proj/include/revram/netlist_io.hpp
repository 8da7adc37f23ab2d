// Copyright 2026 The revram Authors. All rights reserved.
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

#pragma once

#include "revram/netlist.hpp"

#include <string>
#include <string_view>

namespace revram {

/// Line-oriented, RevLib-flavored text form of a netlist.
///
///   .version 2.0
///   .name <identifier>            (extension)
///   .param <key> <integer>        (extension, repeatable)
///   .numvars <N>
///   .variables <v1> ... <vN>
///   .inputs <l1> ... <lN>         (labels; count checked, content ignored)
///   .outputs <o1> ... <oN>
///   .constants <N chars of - 0 1>
///   .garbage <N chars of - 1>
///   .feedback <out>><state> ...   (extension: latch terminal value of line
///                                  <out> into state line <state>)
///   .begin
///   <mnemonic> <var> ...          one gate per line
///   .end
///
/// `#` starts a comment. Mnemonics: not fg dfg t3 f3 p3 mf1 mf2 mf1p mf2p
/// and fg<w> for the w-line Feynman fan-in gate.
std::string serialize(const Netlist &netlist);

/// Throws ParseError with a 1-based line:column position.
Netlist parse(std::string_view text);

/// Reads and parses a file; throws Error if it cannot be opened.
Netlist load_netlist(const std::string &path);

} // namespace revram
