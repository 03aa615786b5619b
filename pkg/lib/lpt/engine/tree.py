"""Tree module.

This module contains the indexed formula tree the tracking engine works on.
Nodes are stored in breadth-first order: every node at depth d comes before
every node at depth d + 1 and siblings keep their left-to-right order, so
node 0 is always the full formula.

"""

import logging
from collections import OrderedDict, deque

from lib.lpt.core.formula import Kind, arguments
from lib.lpt.core.parser import format_formula

logger = logging.getLogger("lpt.engine")


class TreeNode(object):

    __slots__ = ("index", "formula", "node_type", "parent", "children", "depth")

    def __init__(self, index, formula, parent, depth):
        self.index = index
        self.formula = formula
        self.node_type = formula.kind
        self.parent = parent
        self.children = ()
        self.depth = depth

    @property
    def is_leaf(self):
        return self.formula.is_leaf

    @property
    def formula_text(self):
        return format_formula(self.formula)

    def __repr__(self):
        return "TreeNode(%i, %s, parent=%r, children=%r)" % (
            self.index, self.node_type.value, self.parent, list(self.children))


class FormulaTree(object):
    """BFS-ordered node list of a formula plus its module schedule."""

    def __init__(self, formula):
        self.formula = formula
        self.nodes = []
        queue = deque([(formula, None, 0)])
        while queue:
            current, parent, level = queue.popleft()
            node = TreeNode(len(self.nodes), current, parent, level)
            self.nodes.append(node)
            if parent is not None:
                self.nodes[parent].children += (node.index,)
            for child in arguments(current):
                queue.append((child, node.index, level + 1))
        self.height = max(node.depth for node in self.nodes)
        self.leaves = [node.index for node in self.nodes if node.is_leaf]
        self.label_leaves = OrderedDict()
        for index in self.leaves:
            node = self.nodes[index]
            if node.node_type is Kind.ATOM:
                self.label_leaves.setdefault(node.formula.atom_name, []).append(index)
        self.schedule = self._compute_schedule()
        logger.debug("built tree of %i node(s), height %i, schedule %r",
                     len(self.nodes), self.height, self.schedule)

    def _compute_schedule(self):
        """Order in which non-leaf modules run during one update.

        Starting from the leaves, each sweep over the nodes (BFS order)
        promotes every node whose children were all updated by an earlier
        sweep, until the root has been promoted.
        """
        updated = set(self.leaves)
        schedule = []
        while 0 not in updated:
            ready = [node.index for node in self.nodes
                     if node.index not in updated
                     and all(child in updated for child in node.children)]
            updated.update(ready)
            schedule.extend(ready)
        return schedule

    @property
    def root(self):
        return self.nodes[0]

    def __len__(self):
        return len(self.nodes)

    def __getitem__(self, index):
        return self.nodes[index]

    def __iter__(self):
        return iter(self.nodes)

    def shape(self):
        """(type name, parent) per node; two trees with equal shapes index alike."""
        return [(node.node_type.value, node.parent) for node in self.nodes]

    def describe(self):
        return [{"index": node.index,
                 "formula_text": node.formula_text,
                 "type": node.node_type.value,
                 "parent": node.parent} for node in self.nodes]


def build_tree(f):
    return FormulaTree(f)
