# -*- coding: utf-8 -*-
from cli.commands.inner import cmd_inner
from cli.commands.outer import cmd_outer
from cli.commands.realize import cmd_realize
from cli.commands.tools import cmd_export, cmd_iso, cmd_oracle, cmd_simplify
from cli.commands.validate import cmd_validate

__all__ = ["cmd_inner", "cmd_outer", "cmd_realize", "cmd_oracle", "cmd_simplify", "cmd_iso",
           "cmd_export", "cmd_validate"]
