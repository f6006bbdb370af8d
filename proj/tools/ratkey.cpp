// ratkey: command-line front end for the rational tree-key library.
// Exit codes: 0 success, 2 usage, 3 domain error, 4 I/O or corrupt store.

#include <cctype>
#include <filesystem>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "ratkey/bench.hpp"
#include "ratkey/keyio.hpp"
#include "ratkey/oracle.hpp"
#include "ratkey/store.hpp"

namespace {

using ratkey::BigInt;
using ratkey::NodeKey;
using ratkey::TreePath;

// Argument-level problems exit with the usage code, unlike the same
// error kinds raised later from file contents.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TreePath arg_path(const std::string& text) {
  try {
    return ratkey::parse_path(text);
  } catch (const ratkey::tree_error& e) {
    throw usage_error(e.what());
  }
}

NodeKey arg_key(const std::string& text) {
  if (text == "root") return ratkey::root_key();
  try {
    return ratkey::parse_key(text);
  } catch (const ratkey::tree_error& e) {
    if (e.code() == ratkey::errc::parse) throw usage_error(e.what());
    throw;
  }
}

BigInt arg_uint(const std::string& text) {
  if (text.empty()) throw usage_error("expected a decimal integer");
  for (unsigned char c : text) {
    if (!std::isdigit(c)) {
      throw usage_error("expected a decimal integer, got '" + text + "'");
    }
  }
  return BigInt(text);
}

ratkey::TreeStore open_store(const std::string& file, bool may_create) {
  if (may_create && !std::filesystem::exists(file)) return {};
  return ratkey::TreeStore::load(file);
}

void print_records(const std::vector<ratkey::NodeRecord>& records) {
  for (const auto& record : records) {
    std::cout << ratkey::to_string(record.key) << '\t'
              << ratkey::escape_payload(record.payload) << '\n';
  }
}

void demo_figures(const std::string& format) {
  const char* paths[] = {"2",     "2.1",   "2.2",   "2.3",
                         "2.4",   "2.4.1", "2.4.2", "2.4.3"};
  for (const char* path : paths) {
    NodeKey key = ratkey::encode_path(ratkey::parse_path(path));
    if (format == "tsv") {
      std::cout << path << '\t' << key.nv << '\t' << key.dv << '\t' << key.snv
                << '\t' << key.sdv << '\n';
    } else {
      std::cout << path << "  " << key.nv << ' ' << key.dv << ' ' << key.snv
                << ' ' << key.sdv << '\n';
    }
  }
}

void demo_tropashko() {
  auto row = [](const char* label, TreePath path) {
    ratkey::Rational first = ratkey::trop_eval(path);
    path.back() += 1;
    ratkey::Rational second = ratkey::trop_eval(path);
    path.back() += 1;
    ratkey::Rational third = ratkey::trop_eval(path);
    bool up = first < second && second < third;
    bool down = first > second && second > third;
    std::cout << label << ": " << first.str() << (up ? " < " : " > ")
              << second.str() << (up ? " < " : " > ") << third.str() << "  "
              << (up ? "increasing" : down ? "decreasing" : "mixed") << '\n';
  };
  row("level-3", ratkey::parse_path("2.4.3"));
  row("level-4", ratkey::parse_path("2.4.3.3"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational tree keys: encode, decode, store, and measure"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "tsv"}));

  std::function<void()> action;

  auto* encode = app.add_subcommand("encode", "path -> key");
  {
    auto path = std::make_shared<std::string>();
    encode->add_option("path", *path, "tree path, e.g. 2.4.3")->required();
    encode->callback([path, &action] {
      action = [path] {
        std::cout << ratkey::to_string(ratkey::encode_path(arg_path(*path)))
                  << '\n';
      };
    });
  }

  auto* decode = app.add_subcommand("decode", "nv dv -> path and ancestors");
  {
    auto nv = std::make_shared<std::string>();
    auto dv = std::make_shared<std::string>();
    decode->add_option("nv", *nv, "key numerator")->required();
    decode->add_option("dv", *dv, "key denominator")->required();
    decode->callback([nv, dv, &action] {
      action = [nv, dv] {
        ratkey::DecodedKey decoded =
            ratkey::decode_key(arg_uint(*nv), arg_uint(*dv));
        std::cout << ratkey::to_string(decoded.path) << '\n';
        for (const NodeKey& key : decoded.chain) {
          std::cout << ratkey::key_value(key).str() << '\n';
        }
      };
    });
  }

  auto* child = app.add_subcommand("child", "key of the c-th child");
  {
    auto parent = std::make_shared<std::string>();
    auto ordinal = std::make_shared<std::string>();
    child->add_option("parent", *parent, "parent key or 'root'")->required();
    child->add_option("ordinal", *ordinal, "1-based child ordinal")
        ->required();
    child->callback([parent, ordinal, &action] {
      action = [parent, ordinal] {
        std::cout << ratkey::to_string(ratkey::child_key(
                         arg_key(*parent), arg_uint(*ordinal)))
                  << '\n';
      };
    });
  }

  auto* sibling = app.add_subcommand("sibling", "key of the next sibling");
  {
    auto key = std::make_shared<std::string>();
    sibling->add_option("key", *key, "node key")->required();
    sibling->callback([key, &action] {
      action = [key] {
        std::cout << ratkey::to_string(ratkey::next_sibling_key(arg_key(*key)))
                  << '\n';
      };
    });
  }

  auto* insert =
      app.add_subcommand("insert", "append a child under the parent");
  {
    auto store_file = std::make_shared<std::string>();
    auto parent = std::make_shared<std::string>();
    auto payload = std::make_shared<std::string>();
    insert->add_option("--store", *store_file, "store file (created if absent)")
        ->required();
    insert->add_option("parent", *parent, "parent key or 'root'")->required();
    insert->add_option("payload", *payload, "payload text");
    insert->callback([store_file, parent, payload, &action] {
      action = [store_file, parent, payload] {
        ratkey::TreeStore store = open_store(*store_file, true);
        ratkey::NodeRecord record =
            store.insert_child(arg_key(*parent), *payload);
        store.save(*store_file);
        std::cout << ratkey::to_string(record.key) << '\n';
      };
    });
  }

  auto* move = app.add_subcommand(
      "move", "move child n of p0 to become child m of p1");
  {
    auto store_file = std::make_shared<std::string>();
    auto args = std::make_shared<std::vector<std::string>>();
    move->add_option("--store", *store_file, "store file")->required();
    move->add_option("p0_n_p1_m", *args, "p0 n p1 m (keys or 'root')")
        ->required()
        ->expected(4);
    move->callback([store_file, args, &action] {
      action = [store_file, args] {
        if (args->size() != 4) throw usage_error("move needs p0 n p1 m");
        ratkey::TreeStore store = open_store(*store_file, false);
        std::size_t rewritten = store.move_subtree(
            arg_key((*args)[0]), arg_uint((*args)[1]), arg_key((*args)[2]),
            arg_uint((*args)[3]));
        store.save(*store_file);
        std::cout << rewritten << '\n';
      };
    });
  }

  auto* list = app.add_subcommand("list", "all records in key order");
  {
    auto store_file = std::make_shared<std::string>();
    list->add_option("--store", *store_file, "store file")->required();
    list->callback([store_file, &action] {
      action = [store_file] {
        ratkey::TreeStore store = open_store(*store_file, false);
        std::vector<ratkey::NodeRecord> records;
        for (const auto& [key, payload] : store.entries()) {
          records.push_back({key, payload});
        }
        print_records(records);
      };
    });
  }

  auto* subtree = app.add_subcommand("subtree", "records under a node");
  {
    auto store_file = std::make_shared<std::string>();
    auto key = std::make_shared<std::string>();
    subtree->add_option("--store", *store_file, "store file")->required();
    subtree->add_option("key", *key, "node key or 'root'")->required();
    subtree->callback([store_file, key, &action] {
      action = [store_file, key] {
        ratkey::TreeStore store = open_store(*store_file, false);
        print_records(store.subtree(arg_key(*key)));
      };
    });
  }

  auto* sqlpred =
      app.add_subcommand("sqlpred", "integer SQL filter for a node");
  {
    auto kind = std::make_shared<std::string>();
    auto key = std::make_shared<std::string>();
    auto nv_col = std::make_shared<std::string>("nv");
    auto dv_col = std::make_shared<std::string>("dv");
    auto snv_col = std::make_shared<std::string>("snv");
    auto sdv_col = std::make_shared<std::string>("sdv");
    sqlpred->add_option("kind", *kind, "ancestors or descendants")
        ->required()
        ->check(CLI::IsMember({"ancestors", "descendants"}));
    sqlpred->add_option("key", *key, "node key or 'root'")->required();
    sqlpred->add_option("--nv-col", *nv_col, "numerator column name");
    sqlpred->add_option("--dv-col", *dv_col, "denominator column name");
    sqlpred->add_option("--snv-col", *snv_col, "sibling numerator column");
    sqlpred->add_option("--sdv-col", *sdv_col, "sibling denominator column");
    sqlpred->callback([kind, key, nv_col, dv_col, snv_col, sdv_col, &action] {
      action = [kind, key, nv_col, dv_col, snv_col, sdv_col] {
        ratkey::PredicateKind which = *kind == "ancestors"
                                          ? ratkey::PredicateKind::ancestors
                                          : ratkey::PredicateKind::descendants;
        std::cout << ratkey::emit_sql_predicate(which, arg_key(*key), *nv_col,
                                                *dv_col, *snv_col, *sdv_col)
                  << '\n';
      };
    });
  }

  auto* bench = app.add_subcommand("bench", "rows-touched workload report");
  {
    auto spec = std::make_shared<ratkey::WorkloadSpec>();
    auto shape = std::make_shared<std::string>("uniform");
    bench->add_option("--inserts", spec->inserts, "number of inserts");
    bench->add_option("--moves", spec->moves, "number of subtree moves");
    bench->add_option("--seed", spec->seed, "random seed");
    bench->add_option("--shape", *shape, "insert parent selection")
        ->check(CLI::IsMember({"uniform", "leftmost", "chain"}));
    bench->callback([spec, shape, &action] {
      action = [spec, shape] {
        if (*shape == "leftmost") {
          spec->shape = ratkey::WorkloadShape::leftmost;
        } else if (*shape == "chain") {
          spec->shape = ratkey::WorkloadShape::chain;
        }
        std::cout << ratkey::run_workload(*spec).to_tsv();
      };
    });
  }

  auto* demo = app.add_subcommand("demo", "worked-example tables");
  {
    auto name = std::make_shared<std::string>();
    demo->add_option("name", *name, "figures or tropashko")
        ->required()
        ->check(CLI::IsMember({"figures", "tropashko"}));
    demo->callback([name, &format, &action] {
      action = [name, &format] {
        if (*name == "figures") {
          demo_figures(format);
        } else {
          demo_tropashko();
        }
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ratkey::tree_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    bool io_side = e.code() == ratkey::errc::io ||
                   e.code() == ratkey::errc::parse;
    return io_side ? 4 : 3;
  }
  return 0;
}
