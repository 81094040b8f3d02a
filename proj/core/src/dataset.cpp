#include "iann/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "iann/rng.hpp"
#include "text_util.hpp"

namespace iann {

std::vector<RawInstance> parse_dna_dataset(std::string_view text) {
    std::vector<RawInstance> records;
    std::size_t line_no = 0;
    for (auto raw_line : detail::split(text, '\n')) {
        ++line_no;
        if (detail::trim(raw_line).empty()) continue;
        const auto fields = detail::split(raw_line, ',');
        if (fields.size() != 3) {
            throw parse_error("dataset line " + std::to_string(line_no) + ": expected 'label, id, sequence', got " +
                              std::to_string(fields.size()) + " fields");
        }
        RawInstance rec;
        rec.label = std::string(detail::trim(fields[0]));
        rec.id = std::string(detail::trim(fields[1]));
        for (char ch : fields[2]) {
            if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') continue;
            rec.sequence.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
        }
        if (rec.label.empty()) {
            throw parse_error("dataset line " + std::to_string(line_no) + ": empty label");
        }
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw parse_error("dataset: no records");
    const auto len = records.front().sequence.size();
    for (std::size_t r = 0; r < records.size(); ++r) {
        if (records[r].sequence.size() != len) {
            throw parse_error("dataset record '" + records[r].id + "': sequence length " +
                              std::to_string(records[r].sequence.size()) + " differs from " + std::to_string(len));
        }
    }
    return records;
}

std::vector<double> one_hot_encode(std::string_view sequence) {
    std::vector<double> x;
    x.reserve(sequence.size() * 4);
    for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
        const char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(sequence[pos])));
        // Block order A, C, G, T.
        double a = 0, c = 0, g = 0, t = 0;
        switch (ch) {
            case 'A': a = 1; break;
            case 'C': c = 1; break;
            case 'G': g = 1; break;
            case 'T': t = 1; break;
            case 'N': a = c = g = t = 0.25; break;
            case 'D': a = g = t = 1.0 / 3.0; break;
            case 'S': c = g = 0.5; break;
            case 'R': a = g = 0.5; break;
            default:
                throw parse_error("sequence position " + std::to_string(pos) + ": unknown nucleotide code '" +
                                  std::string(1, sequence[pos]) + "'");
        }
        x.push_back(a);
        x.push_back(c);
        x.push_back(g);
        x.push_back(t);
    }
    return x;
}

std::string decode_sequence(std::span<const double> x) {
    if (x.size() % 4 != 0) throw validation_error("decode: input length not a multiple of 4");
    static constexpr char kAlphabet[4] = {'A', 'C', 'G', 'T'};
    std::string seq;
    seq.reserve(x.size() / 4);
    for (std::size_t b = 0; b < x.size(); b += 4) {
        int best = 0;
        for (int i = 1; i < 4; ++i)
            if (x[b + i] > x[b + best]) best = i;
        seq.push_back(kAlphabet[best]);
    }
    return seq;
}

std::vector<int> Dataset::class_counts() const {
    std::vector<int> counts(class_names.size(), 0);
    for (const auto& inst : instances) ++counts[static_cast<std::size_t>(inst.label)];
    return counts;
}

void Dataset::validate() const {
    if (instances.empty()) throw validation_error("dataset has no instances");
    if (positions < 1) throw validation_error("dataset positions must be >= 1");
    if (class_names.empty()) throw validation_error("dataset has no classes");
    const auto len = instances.front().x.size();
    if (len == 0 || len % static_cast<std::size_t>(positions) != 0) {
        throw validation_error("dataset input length " + std::to_string(len) + " is not a multiple of " +
                               std::to_string(positions) + " positions");
    }
    for (const auto& inst : instances) {
        if (inst.x.size() != len) throw validation_error("dataset has ragged input vectors");
        if (inst.label < 0 || inst.label >= n_classes()) {
            throw validation_error("dataset label " + std::to_string(inst.label) + " out of range");
        }
    }
}

FriVector Dataset::expand_input_fri(const FriVector& per_position) const {
    if (per_position.size() != positions) {
        throw validation_error("FRI has " + std::to_string(per_position.size()) + " entries, dataset has " +
                               std::to_string(positions) + " positions");
    }
    const int factor = n_inputs() / positions;
    std::vector<double> expanded;
    expanded.reserve(static_cast<std::size_t>(n_inputs()));
    for (int p = 0; p < positions; ++p) {
        for (int i = 0; i < factor; ++i) expanded.push_back(per_position[p]);
    }
    return FriVector::validated(std::move(expanded));
}

Dataset encode_dna_dataset(const std::vector<RawInstance>& records) {
    if (records.empty()) throw validation_error("cannot encode an empty record list");
    Dataset ds;
    ds.positions = static_cast<int>(records.front().sequence.size());
    ds.encoding = "one-hot ACGT, 4 inputs per position, fractional mass for ambiguity codes N/D/S/R";
    for (const auto& rec : records) {
        auto it = std::find(ds.class_names.begin(), ds.class_names.end(), rec.label);
        int label;
        if (it == ds.class_names.end()) {
            label = static_cast<int>(ds.class_names.size());
            ds.class_names.push_back(rec.label);
        } else {
            label = static_cast<int>(it - ds.class_names.begin());
        }
        ds.instances.push_back({one_hot_encode(rec.sequence), label});
    }
    ds.validate();
    return ds;
}

std::vector<double> target_vector(int class_index, int n_outputs) {
    if (n_outputs == 1) {
        if (class_index < 0 || class_index > 1) throw validation_error("binary target needs class index 0 or 1");
        return {class_index == 1 ? 1.0 : 0.0};
    }
    if (class_index < 0 || class_index >= n_outputs) throw validation_error("target class index out of range");
    std::vector<double> t(static_cast<std::size_t>(n_outputs), 0.0);
    t[static_cast<std::size_t>(class_index)] = 1.0;
    return t;
}

FriVector expand_fri(const FriVector& per_position) {
    std::vector<double> expanded;
    expanded.reserve(static_cast<std::size_t>(per_position.size()) * 4);
    for (int p = 0; p < per_position.size(); ++p) {
        for (int i = 0; i < 4; ++i) expanded.push_back(per_position[p]);
    }
    return FriVector::validated(std::move(expanded));
}

SplitPlan stratified_kfold(const Dataset& dataset, int k, std::uint64_t seed) {
    const int n = static_cast<int>(dataset.instances.size());
    if (k < 2) throw validation_error("k-fold needs k >= 2");
    if (k > n) throw validation_error("k-fold needs k <= dataset size");

    const auto counts = dataset.class_counts();
    if (k < n) {
        // Each fold must see every class; the k == n leave-one-out degenerate
        // is exempt.
        for (std::size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] < k) {
                throw validation_error("class '" + dataset.class_names[c] + "' has " + std::to_string(counts[c]) +
                                       " instances, fewer than " + std::to_string(k) + " folds");
            }
        }
    }

    Rng rng(seed);
    std::vector<std::vector<int>> by_class(counts.size());
    for (int i = 0; i < n; ++i) by_class[static_cast<std::size_t>(dataset.instances[i].label)].push_back(i);
    for (auto& members : by_class) rng.shuffle(members);

    // Deal each class across folds. The per-class remainder goes to the
    // currently least-loaded folds so total fold sizes also differ by at most
    // one.
    SplitPlan plan;
    plan.seed = seed;
    plan.folds.assign(static_cast<std::size_t>(k), {});
    std::vector<int> load(static_cast<std::size_t>(k), 0);
    for (auto& members : by_class) {
        const int base = static_cast<int>(members.size()) / k;
        const int extra = static_cast<int>(members.size()) % k;
        std::vector<int> order(static_cast<std::size_t>(k));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return load[a] < load[b]; });
        std::vector<int> quota(static_cast<std::size_t>(k), base);
        for (int e = 0; e < extra; ++e) ++quota[static_cast<std::size_t>(order[static_cast<std::size_t>(e)])];
        std::size_t next = 0;
        for (int f = 0; f < k; ++f) {
            for (int q = 0; q < quota[static_cast<std::size_t>(f)]; ++q) {
                plan.folds[static_cast<std::size_t>(f)].push_back(members[next++]);
            }
            load[static_cast<std::size_t>(f)] += quota[static_cast<std::size_t>(f)];
        }
    }
    for (auto& fold : plan.folds) std::sort(fold.begin(), fold.end());
    return plan;
}

SplitPlan learning_curve_split(const Dataset& dataset, int train_size, std::uint64_t seed) {
    const int n = static_cast<int>(dataset.instances.size());
    if (train_size < 1 || train_size >= n) {
        throw validation_error("train_size must be in [1, " + std::to_string(n - 1) + "], got " +
                               std::to_string(train_size));
    }
    Rng rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    SplitPlan plan;
    plan.seed = seed;
    plan.folds.resize(2);
    plan.folds[0].assign(order.begin(), order.begin() + train_size);
    plan.folds[1].assign(order.begin() + train_size, order.end());
    std::sort(plan.folds[0].begin(), plan.folds[0].end());
    std::sort(plan.folds[1].begin(), plan.folds[1].end());
    return plan;
}

std::string dataset_to_json(const Dataset& dataset) {
    dataset.validate();
    nlohmann::json j;
    j["class_names"] = dataset.class_names;
    j["positions"] = dataset.positions;
    j["encoding"] = dataset.encoding;
    auto& instances = j["instances"] = nlohmann::json::array();
    for (const auto& inst : dataset.instances) {
        instances.push_back({{"label", inst.label}, {"x", inst.x}});
    }
    return j.dump(2) + "\n";
}

Dataset dataset_from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("dataset JSON: ") + e.what());
    }
    try {
        Dataset ds;
        ds.class_names = j.at("class_names").get<std::vector<std::string>>();
        ds.positions = j.at("positions").get<int>();
        ds.encoding = j.at("encoding").get<std::string>();
        for (const auto& item : j.at("instances")) {
            ds.instances.push_back({item.at("x").get<std::vector<double>>(), item.at("label").get<int>()});
        }
        ds.validate();
        return ds;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("dataset JSON: ") + e.what());
    }
}

Dataset subset(const Dataset& dataset, std::span<const int> indices) {
    Dataset out;
    out.class_names = dataset.class_names;
    out.positions = dataset.positions;
    out.encoding = dataset.encoding;
    out.instances.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= static_cast<int>(dataset.instances.size())) {
            throw validation_error("subset index out of range");
        }
        out.instances.push_back(dataset.instances[static_cast<std::size_t>(i)]);
    }
    out.validate();
    return out;
}

Dataset load_dna_dataset_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open dataset file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return encode_dna_dataset(parse_dna_dataset(buf.str()));
}

}  // namespace iann
