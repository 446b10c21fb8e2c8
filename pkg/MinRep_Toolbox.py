"""
MinRep Toolbox - Unified Entry Point

Routes a tool name to the matching ``minrep_cli`` subcommand:
- MinRep_Toolbox.py --tool <toolname> [options]
- MinRep_Toolbox.py <subcommand> [options]

Copyright 2026 MinRep Toolbox contributors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import sys
from pathlib import Path

_script_dir = Path(__file__).parent
_src_dir = _script_dir / "src"
if _src_dir.exists():
    sys.path.insert(0, str(_src_dir))

# Normalized tool name to subcommand
TOOL_COMMANDS = {
    "decompose_s2": "decompose-s2",
    "annihilator": "annihilator",
    "casimir": "casimir",
    "gvm_check": "gvm-check",
    "classify": "classify",
    "table1": "table1",
    "ktypes": "ktypes",
    "sl3_kernel": "sl3-kernel",
    "lambda2a": "lambda2a",
    "verify_all": "verify-all",
}

# Short names accepted by the launch scripts
TOOL_ALIASES = {
    "s2": "decompose_s2",
    "gvm": "gvm_check",
    "kernel": "sl3_kernel",
    "verify": "verify_all",
}

_DEBUG = "--debug" in sys.argv


def debug(message):
    if _DEBUG:
        print(f"[DEBUG] {message}", file=sys.stderr)


def resolve_tool(tool_name):
    """Map a tool name (``-`` and ``_`` interchangeable, aliases allowed) to a subcommand."""
    name = tool_name.lower().replace("-", "_")
    name = TOOL_ALIASES.get(name, name)
    debug(f"Normalized tool name: {name}")
    return TOOL_COMMANDS.get(name)


def print_help():
    print("MinRep Toolbox - Unified Entry Point")
    print()
    print("Usage:")
    print("  MinRep_Toolbox.py --tool <toolname> [options]")
    print("  MinRep_Toolbox.py <toolname> [options]")
    print()
    print("Available tools:")
    for tool in sorted(TOOL_COMMANDS):
        print(f"  - {tool}")
    print()
    print("Examples:")
    print("  MinRep_Toolbox.py --tool decompose_s2 --n 4")
    print("  MinRep_Toolbox.py sl3-kernel --a 0 --m-max 13")
    print("  MinRep_Toolbox.py --text verify-all --max-n 4")


def run_tool(tool_name, args):
    """Run one tool; returns its exit code."""
    command = resolve_tool(tool_name)
    if command is None:
        print(f"[ERROR] Unknown tool: {tool_name}", file=sys.stderr)
        print(f"[INFO] Available tools: {', '.join(sorted(TOOL_COMMANDS))}", file=sys.stderr)
        return 1
    try:
        from minrep_cli import main as cli_main
    except ImportError as e:
        print(f"[ERROR] Failed to import minrep_cli: {e}", file=sys.stderr)
        print(f"[INFO] Looking for it in: {_src_dir}", file=sys.stderr)
        return 1
    # Global flags must precede the subcommand for argparse
    flags = [a for a in args if a in ("--json", "--text", "--debug")]
    rest = [a for a in args if a not in flags]
    argv = flags + [command] + rest
    debug(f"Calling minrep_cli.main({argv})")
    return cli_main(argv)


def main(argv=None):
    """Route to a tool based on the arguments."""
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        print_help()
        return 0
    if argv[0] == "--tool":
        if len(argv) < 2:
            print("[ERROR] --tool needs a tool name", file=sys.stderr)
            return 1
        return run_tool(argv[1], argv[2:])
    flags = [a for a in argv if a in ("--json", "--text", "--debug")]
    rest = [a for a in argv if a not in flags]
    if not rest:
        print_help()
        return 0
    return run_tool(rest[0], flags + rest[1:])


if __name__ == "__main__":
    sys.exit(main())
