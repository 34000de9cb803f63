#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace popav {

/**
 * One row of command output. `values` is an ordered column list so csv and
 * json emission are stable; `items` carries generated elements when a command
 * produces a list. Serializes to json and parses back identically.
 */
struct OutputRecord {
    std::string command;
    std::string subject;
    int n = 0;
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<std::string> items;
    bool ok = true;

    std::string to_json() const;
    static OutputRecord from_json(const std::string& text);

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

void emit_records(const std::vector<OutputRecord>& records, const std::string& format,
                  std::ostream& out);

// The whole command-line surface, callable in-process. args excludes argv[0].
// Exit code 0 iff every check performed by the invocation passed; 1 on check
// failure; 2 on usage, parse, domain, or resource errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace popav
