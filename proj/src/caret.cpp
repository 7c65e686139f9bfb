#include "thompson/caret.hpp"

#include <functional>

namespace thompson {

std::string type_string(const CaretType &t) {
    switch (t.kind) {
    case Kind::L0:
        return "L_0";
    case Kind::LL:
        return "L_L";
    case Kind::R0:
        return "R_0";
    case Kind::RR:
        return "R_R";
    case Kind::Rj:
        return "R(" + std::to_string(t.j) + ")";
    case Kind::M0:
        return "M_0(" + std::to_string(t.i) + ")";
    case Kind::Mij:
        return "M(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
    }
    return "?";
}

std::string base_string(const BaseType &b) {
    switch (b.kind) {
    case Base::L:
        return "L";
    case Base::R:
        return "R";
    case Base::M:
        return "M(" + std::to_string(b.index) + ")";
    }
    return "?";
}

std::vector<CaretType> all_caret_types(int p) {
    std::vector<CaretType> v{{Kind::L0}, {Kind::LL}, {Kind::R0}, {Kind::RR}};
    for (int j = 1; j <= p; ++j)
        v.push_back({Kind::Rj, 0, j});
    for (int i = 1; i <= p; ++i) {
        v.push_back({Kind::M0, i});
        for (int j = 1; j <= i; ++j)
            v.push_back({Kind::Mij, i, j});
    }
    return v;
}

namespace {

BaseType child_type(const BaseType &parent, bool parent_is_root, int j, int p) {
    // j is 1-based child position
    switch (parent.kind) {
    case Base::L:
        if (j == 1)
            return {Base::L};
        if (j == p + 1)
            return parent_is_root ? BaseType{Base::R} : BaseType{Base::M, p};
        return {Base::M, j - 1};
    case Base::R:
        if (j == 1)
            return {Base::M, p};
        if (j == p + 1)
            return {Base::R};
        return {Base::M, j - 1};
    case Base::M: {
        int i = parent.index;
        if (j <= p - i + 1)
            return {Base::M, i + j - 1};
        return {Base::M, j - (p - i + 1)};
    }
    }
    return {};
}

// Children emitted before the caret itself in the numbering.
int children_before(const BaseType &b, int p) { return b.kind == Base::M ? p - b.index + 1 : 1; }

} // namespace

std::vector<CaretNode> caret_layout(const Tree &t, int p) {
    std::vector<CaretNode> nodes;
    if (t.is_leaf())
        return nodes;
    std::size_t pos = 0;
    std::vector<int> address;
    std::function<int(int, BaseType)> build = [&](int parent, BaseType base) -> int {
        if (!t.code[pos]) {
            ++pos;
            return -1;
        }
        ++pos;
        int me = static_cast<int>(nodes.size());
        nodes.push_back(CaretNode{address, parent, std::vector<int>(p + 1, -1), base, 0});
        for (int j = 0; j <= p; ++j) {
            address.push_back(j);
            int c = build(me, child_type(base, parent < 0, j + 1, p));
            address.pop_back();
            nodes[me].children[j] = c;
        }
        return me;
    };
    build(-1, {Base::L});

    int next = 0;
    std::function<void(int)> emit = [&](int n) {
        int split = children_before(nodes[n].base, p);
        for (int j = 0; j <= p; ++j) {
            if (j == split)
                nodes[n].number = next++;
            if (nodes[n].children[j] >= 0)
                emit(nodes[n].children[j]);
        }
    };
    emit(0);
    return nodes;
}

int caret_at(const std::vector<CaretNode> &layout, const std::vector<int> &address) {
    if (layout.empty())
        return -1;
    int n = 0;
    for (int a : address) {
        n = layout[n].children.at(a);
        if (n < 0)
            return -1;
    }
    return n;
}

std::vector<BaseType> base_types(const Tree &t, int p) {
    std::vector<BaseType> v;
    for (const auto &n : caret_layout(t, p))
        v.push_back(n.base);
    return v;
}

std::vector<int> number_carets(const Tree &t, int p) {
    std::vector<int> v;
    for (const auto &n : caret_layout(t, p))
        v.push_back(n.number);
    return v;
}

std::vector<CaretType> classify(const std::vector<CaretNode> &layout, int p) {
    const int k = static_cast<int>(layout.size());
    std::vector<int> by_number(k);
    for (int n = 0; n < k; ++n)
        by_number[layout[n].number] = n;

    // leftmost child successor: smallest-numbered child caret numbered after the parent
    auto leftmost_child_successor = [&](int n) {
        int best = -1;
        for (int c : layout[n].children)
            if (c >= 0 && layout[c].number > layout[n].number &&
                (best < 0 || layout[c].number < layout[best].number))
                best = c;
        return best;
    };

    std::vector<CaretType> types(k);
    for (int num = 0; num < k; ++num) {
        const CaretNode &node = layout[by_number[num]];
        const int n = by_number[num];
        switch (node.base.kind) {
        case Base::L:
            types[num] = {num == 0 ? Kind::L0 : Kind::LL};
            break;
        case Base::R: {
            bool all_right = true;
            for (int s = num + 1; s < k && all_right; ++s)
                all_right = layout[by_number[s]].base.kind == Base::R;
            if (all_right) {
                types[num] = {Kind::R0};
            } else if (layout[by_number[num + 1]].base.kind == Base::R) {
                types[num] = {Kind::RR};
            } else {
                int c = leftmost_child_successor(n);
                if (c < 0)
                    throw ClassificationError("right caret with successors but no child successor");
                const BaseType &b = layout[c].base;
                types[num] = {Kind::Rj, 0, b.kind == Base::R ? p : b.index};
            }
            break;
        }
        case Base::M: {
            int c = leftmost_child_successor(n);
            if (c < 0) {
                types[num] = {Kind::M0, node.base.index};
                break;
            }
            const BaseType &b = layout[c].base;
            if (b.kind != Base::M || b.index > node.base.index)
                throw ClassificationError("middle caret with leftmost child successor of type " +
                                          base_string(b));
            types[num] = {Kind::Mij, node.base.index, b.index};
            break;
        }
        }
    }
    return types;
}

std::vector<CaretType> classify(const Tree &t, int p) { return classify(caret_layout(t, p), p); }

std::string classification_dump(const std::vector<CaretType> &types) {
    std::string s;
    for (std::size_t i = 0; i < types.size(); ++i)
        s += std::to_string(i) + ":" + type_string(types[i]) + "\n";
    return s;
}

} // namespace thompson
