"""
Edge-list module for the Small World toolkit.
Reads and writes graphs as `n m` followed by sorted `u v` lines.
"""

from pathlib import Path

from .errors import EdgeListFormatError, SmallWorldError
from .graph import Graph
from .message_log import MessageLog


class EdgeListCodec:
    """Bit-exact edge-list format; self-loops are implicit and never listed"""

    @staticmethod
    def _parse_pair(line, line_no):
        tokens = line.split(' ')
        # Canonical decimal only: no signs, no leading zeros
        canonical = all(t.isascii() and t.isdigit() and (t == "0" or t[0] != "0") for t in tokens)
        if len(tokens) != 2 or not canonical:
            raise EdgeListFormatError(f"Line {line_no}: expected two non-negative integers, got {line!r}")
        return int(tokens[0]), int(tokens[1])

    @staticmethod
    def dumps(graph):
        """Serialize a graph"""
        lines = [f"{graph.node_count} {graph.arc_count}"]
        lines.extend(f"{u} {v}" for u, v in graph.edges())
        return "\n".join(lines) + "\n"

    @staticmethod
    def loads(text):
        """Parse a graph, rejecting anything but the canonical form"""
        if not text.endswith("\n"):
            raise EdgeListFormatError("File must end with a newline")
        lines = text[:-1].split("\n")

        n, m = EdgeListCodec._parse_pair(lines[0], 1)
        if n < 1:
            raise EdgeListFormatError(f"Header declares {n} nodes; at least 1 is required")
        if m < n or (m - n) % 2:
            raise EdgeListFormatError(
                f"Header arc count {m} is inconsistent with {n} nodes (need m >= n and m - n even)")

        expected = (m - n) // 2
        body = lines[1:]
        if len(body) != expected:
            raise EdgeListFormatError(
                f"Header announces {expected} edges but the file lists {len(body)}")

        graph = Graph(n)
        previous = None
        for line_no, line in enumerate(body, start=2):
            u, v = EdgeListCodec._parse_pair(line, line_no)
            if u == v:
                raise EdgeListFormatError(f"Line {line_no}: self-loop ({u},{v}) must not be listed")
            if u > v:
                raise EdgeListFormatError(f"Line {line_no}: expected u < v, got ({u},{v})")
            if v >= n:
                raise EdgeListFormatError(f"Line {line_no}: node {v} out of range for {n} nodes")
            if previous is not None and (u, v) <= previous:
                kind = "duplicate" if (u, v) == previous else "unsorted"
                raise EdgeListFormatError(f"Line {line_no}: {kind} edge ({u},{v})")
            try:
                graph.add_undirected_edge(u, v)
            except SmallWorldError as e:
                raise EdgeListFormatError(f"Line {line_no}: {e}")
            previous = (u, v)
        return graph

    @staticmethod
    def read(path):
        """Read a graph from an edge-list file"""
        path = Path(path)
        with open(path, 'r', encoding='ascii', newline='') as f:
            try:
                text = f.read()
            except UnicodeDecodeError:
                raise EdgeListFormatError(f"{path} is not an ASCII edge list")
        graph = EdgeListCodec.loads(text)
        MessageLog.log_message(f"Read {graph!r} from {path}")
        return graph

    @staticmethod
    def write(graph, path):
        """Write a graph to an edge-list file"""
        path = Path(path)
        with open(path, 'w', encoding='ascii', newline='') as f:
            f.write(EdgeListCodec.dumps(graph))
        MessageLog.log_message(f"Wrote {graph!r} to {path}")
