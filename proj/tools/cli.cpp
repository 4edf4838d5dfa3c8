#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <future>
#include <string>
#include <vector>

#include "eah/automaton.hpp"
#include "eah/bench_report.hpp"
#include "eah/codec.hpp"
#include "eah/container.hpp"
#include "eah/context_model.hpp"
#include "eah/error.hpp"

namespace eah::cli {

namespace {

std::string read_binary_file(const std::filesystem::path& path) {
    if (std::filesystem::is_directory(path)) {
        throw Error(errc::io_failure, path.string() + " is a directory");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(errc::io_failure, "cannot open " + path.string() + " for reading");
    }
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(errc::io_failure, "failed reading " + path.string());
    }
    return data;
}

void write_binary_file(const std::filesystem::path& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(errc::io_failure, "cannot open " + path.string() + " for writing");
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw Error(errc::io_failure, "failed writing " + path.string());
    }
}

// "auto" derives the alphabet from the input (distinct bytes in value
// order); anything else is taken as the literal symbol list. An empty input
// in auto mode falls back to a one-symbol alphabet so the container stays
// well formed.
Alphabet resolve_alphabet(const std::string& spec, std::string_view input) {
    if (spec == "auto") {
        if (input.empty()) {
            return Alphabet(std::string_view("\0", 1));
        }
        return Alphabet::scan(input);
    }
    return Alphabet(spec);
}

int cmd_encode(const std::string& input_path, const std::string& output_path,
               std::size_t order, const std::string& alphabet_spec,
               std::ostream& out) {
    const std::string data = read_binary_file(input_path);
    const Alphabet alphabet = resolve_alphabet(alphabet_spec, data);
    const EahPayload payload = encode(data, order, alphabet);
    write_container_file(output_path, payload);
    const auto parts = payload.component_lengths();
    out << "a=" << parts[0] << " b=" << parts[1] << " c=" << parts[2]
        << " d=" << parts[3] << " e=" << parts[4] << " total=" << payload.total_bits()
        << "\n";
    return 0;
}

int cmd_decode(const std::string& input_path, const std::string& output_path) {
    const EahPayload payload = read_container_file(input_path);
    const std::string data = decode(payload);
    if (data.size() != payload.original_length) {
        throw Error(errc::malformed_payload, "decoded length disagrees with the header");
    }
    write_binary_file(output_path, data);
    return 0;
}

int cmd_dot(const std::string& input_path, const std::string& output_path,
            std::size_t order) {
    const std::string data = read_binary_file(input_path);
    const Alphabet alphabet = resolve_alphabet("auto", data);
    const ContextModel model = build_context_model(data, order, alphabet);
    const AdaptiveAutomaton automaton = build_automaton(data, order, model);
    write_binary_file(output_path, automaton.to_dot());
    return 0;
}

int cmd_bench(const std::vector<std::string>& files,
              const std::vector<std::size_t>& orders, std::ostream& out,
              std::ostream& err) {
    struct FileResult {
        std::vector<BenchRow> rows;
        std::string error;
    };
    // Encoding is pure, so files are processed concurrently; output is
    // joined back in input order.
    std::vector<std::future<FileResult>> futures;
    futures.reserve(files.size());
    for (const std::string& file : files) {
        futures.push_back(std::async(std::launch::async, [file, &orders] {
            FileResult result;
            try {
                const std::string data = read_binary_file(file);
                const Alphabet alphabet = resolve_alphabet("auto", data);
                for (std::size_t order : orders) {
                    result.rows.push_back(make_bench_row(file, data, order, alphabet));
                }
            } catch (const std::exception& e) {
                result.error = e.what();
            }
            return result;
        }));
    }
    std::vector<BenchRow> rows;
    bool failed = false;
    for (std::size_t i = 0; i < futures.size(); ++i) {
        FileResult result = futures[i].get();
        if (!result.error.empty()) {
            err << "error: " << files[i] << ": " << result.error << "\n";
            failed = true;
            continue;
        }
        rows.insert(rows.end(), result.rows.begin(), result.rows.end());
    }
    out << format_table(rows) << "\n" << format_csv(rows);
    return failed ? 2 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"eahc - adaptive per-context code compressor"};
    app.require_subcommand(1);

    std::string input_path;
    std::string output_path;
    std::string alphabet_spec = "auto";
    std::size_t order = 1;
    std::vector<std::size_t> orders;
    std::vector<std::string> files;

    CLI::App* encode_cmd = app.add_subcommand("encode", "compress a file");
    encode_cmd->add_option("--order", order, "context length")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{255}));
    encode_cmd->add_option("--alphabet", alphabet_spec,
                           "'auto' or the literal symbol list");
    encode_cmd->add_option("input", input_path, "file to compress")->required();
    encode_cmd->add_option("output", output_path, "container to write")->required();

    CLI::App* decode_cmd = app.add_subcommand("decode", "expand a container");
    decode_cmd->add_option("input", input_path, "container to read")->required();
    decode_cmd->add_option("output", output_path, "file to write")->required();

    CLI::App* bench_cmd =
        app.add_subcommand("bench", "compare against the baseline coders");
    bench_cmd->add_option("--orders", orders, "context lengths, comma separated")
        ->delimiter(',')
        ->check(CLI::Range(std::size_t{1}, std::size_t{255}));
    bench_cmd->add_option("files", files, "inputs to measure");

    CLI::App* dot_cmd = app.add_subcommand("dot", "render the automaton of a file");
    dot_cmd->add_option("--order", order, "context length")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{255}));
    dot_cmd->add_option("input", input_path, "file to analyze")->required();
    dot_cmd->add_option("output", output_path, "DOT file to write")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (encode_cmd->parsed()) {
            return cmd_encode(input_path, output_path, order, alphabet_spec, out);
        }
        if (decode_cmd->parsed()) {
            return cmd_decode(input_path, output_path);
        }
        if (bench_cmd->parsed()) {
            if (orders.empty()) {
                orders.push_back(1);
            }
            return cmd_bench(files, orders, out, err);
        }
        if (dot_cmd->parsed()) {
            return cmd_dot(input_path, output_path, order);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace eah::cli
