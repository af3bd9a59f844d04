#!/usr/bin/env python3
"""
链环不变量命令行工具
构造与导出链环、计算 pd / sdim、复现表示表、运行定理扫描

退出码：0 成功，1 定理级检查失败，2 用法、解析或规模限制错误
"""

import argparse
import sys
from typing import List, Optional

from src.chains import ChainCycle, Parity, build_even_chain_cycle, build_odd_chain_cycle, labeled_of, parse_chain_spec
from src.graph import to_dot, write_edge_list
from src.resolving import (
    claimed_representations,
    constructed_partition,
    format_partition,
    representation_table,
    table_to_json,
    table_to_tsv,
)
from src.shared.exceptions import BaseError, ValidationError
from src.shared.settings import ChainDimSettings, load_settings
from src.shared.utils.file_utils import dumps_json, emit
from src.shared.utils.log_config import init_logging
from src.shared.utils.logger import LoggerMixin
from src.shared.utils.validators import parse_int_list
from src.strong import SdimRoute, min_vertex_cover, predicted_srg, strong_resolving_graph
from src.verification import invariants_report, run_random_suite, run_sweep

# tables 命令的两个实例
TABLE_INSTANCES = {
    1: (Parity.EVEN, (8, 10, 8)),
    2: (Parity.ODD, (5, 7, 5)),
}


class ChainCLI(LoggerMixin):
    """链环不变量命令行工具"""

    def __init__(self):
        self.parser = argparse.ArgumentParser(prog='chaindim', description='链环的划分维数与强度量维数')
        self.setup_parser()

    def setup_parser(self):
        """设置命令行参数解析器"""
        self.parser.add_argument('--log-level', help='控制台日志级别（覆盖配置）')
        self.parser.add_argument('--log-config', help='日志配置 YAML 路径')
        subparsers = self.parser.add_subparsers(dest='command', help='可用命令')

        # build命令：构造并导出图
        build_parser = subparsers.add_parser('build', help='构造实例并导出边表或 DOT')
        build_parser.add_argument('spec', help='实例描述，如 even:8,10,8 / odd:5,7,5 / cycle:6')
        build_parser.add_argument('--format', choices=['edgelist', 'dot'], default='edgelist', help='输出格式')
        build_parser.add_argument('--out', help='输出文件，默认 stdout')

        # tables命令：复现表示表
        tables_parser = subparsers.add_parser('tables', help='输出构造划分下的表示表')
        tables_parser.add_argument('which', type=int, choices=sorted(TABLE_INSTANCES), help='1: C(C8,C10,C8)，2: C(C5,C7,C5)')
        tables_parser.add_argument('--format', choices=['tsv', 'json'], default='tsv', help='输出格式')
        tables_parser.add_argument('--out', help='输出文件，默认 stdout')

        # invariants命令：单实例不变量
        inv_parser = subparsers.add_parser('invariants', help='计算单个实例的 pd 与 sdim')
        inv_parser.add_argument('spec', help='实例描述，支持 file:<边表路径>')
        inv_parser.add_argument('--pd-method', choices=['chain', 'exact'], default='chain', help='pd 求解方式')
        inv_parser.add_argument('--sdim-method', choices=[r.value for r in SdimRoute], default='cover',
                                help='sdim 求解方式')
        inv_parser.add_argument('--with-dim', action='store_true', help='同时穷举度量维数')
        inv_parser.add_argument('--max-vertices', type=int, help='覆盖所有穷举求解器的顶点数上限')
        inv_parser.add_argument('--out', help='输出文件，默认 stdout')

        # verify命令：定理扫描
        verify_parser = subparsers.add_parser('verify', help='对一族链环运行定理扫描')
        verify_parser.add_argument('--family', choices=[p.value for p in Parity], required=True, help='链环族')
        verify_parser.add_argument('--ns', required=True, help='环长取值，如 6,8,10')
        verify_parser.add_argument('--ms', required=True, help='环数取值，如 2,3')
        verify_parser.add_argument('--seed', type=int, help='记录在报告中的种子')
        verify_parser.add_argument('--workers', type=int, help='并行进程数')
        verify_parser.add_argument('--out', help='JSON 报告文件，默认 stdout')

        # random命令：随机语料
        random_parser = subparsers.add_parser('random', help='在随机连通图语料上核对 sdim、α+β 与 pd 上界')
        random_parser.add_argument('--count', type=int, help='语料大小')
        random_parser.add_argument('--seed', type=int, help='随机种子')
        random_parser.add_argument('--workers', type=int, help='并行进程数')
        random_parser.add_argument('--out', help='JSON 报告文件，默认 stdout')

        # srg命令：强分辨图报告
        srg_parser = subparsers.add_parser('srg', help='输出强分辨图的计算边、预测边与差异')
        srg_parser.add_argument('spec', help='实例描述')
        srg_parser.add_argument('--out', help='输出文件，默认 stdout')

        # partition命令：导出构造划分
        partition_parser = subparsers.add_parser('partition', help='以划分文本格式导出构造划分')
        partition_parser.add_argument('spec', help='链环描述')
        partition_parser.add_argument('--out', help='输出文件，默认 stdout')

        # ledger命令：公式核对
        ledger_parser = subparsers.add_parser('ledger', help='核对分段表示公式')
        ledger_parser.add_argument('spec', help='链环描述')
        ledger_parser.add_argument('--out', help='输出文件，默认 stdout')

    def run(self, argv: Optional[List[str]] = None) -> int:
        """运行命令行工具，返回退出码"""
        args = self.parser.parse_args(argv)

        if not args.command:
            self.parser.print_help(sys.stderr)
            return 2

        try:
            init_logging(args.log_config, level_override=args.log_level)
            self.settings = load_settings()
            handler = getattr(self, f"cmd_{args.command}")
            return handler(args)
        except BaseError as e:
            self.logger.debug("command failed", command=args.command, **e.to_dict())
            sys.stderr.write(f"error: {e}\n")
            return e.exit_code

    def _indent(self) -> Optional[int]:
        return self.settings.output.indent

    def _chain(self, spec: str) -> ChainCycle:
        instance = parse_chain_spec(spec)
        if not isinstance(instance, ChainCycle):
            raise ValidationError(f"{spec!r} is not a chain cycle; use even:<n,...> or odd:<n,...>", field="spec")
        return instance

    def cmd_build(self, args) -> int:
        """构造实例并导出"""
        lg = labeled_of(parse_chain_spec(args.spec))
        text = to_dot(lg.graph, labels=lg.label_of) if args.format == 'dot' else write_edge_list(lg.graph)
        emit(text, args.out)
        return 0

    def cmd_tables(self, args) -> int:
        """输出 C(C8,C10,C8) 或 C(C5,C7,C5) 的表示表"""
        parity, lengths = TABLE_INSTANCES[args.which]
        cc = build_even_chain_cycle(lengths) if parity is Parity.EVEN else build_odd_chain_cycle(lengths)
        rows = representation_table(cc, constructed_partition(cc))
        emit(table_to_json(rows, self._indent()) if args.format == 'json' else table_to_tsv(rows), args.out)
        return 0

    def cmd_invariants(self, args) -> int:
        """单实例不变量报告"""
        settings: ChainDimSettings = self.settings
        if args.max_vertices is not None:
            settings = settings.with_limits(
                pd_exact_max_vertices=args.max_vertices,
                md_exact_max_vertices=args.max_vertices,
                sdim_brute_max_vertices=args.max_vertices,
            )
        report = invariants_report(
            parse_chain_spec(args.spec),
            pd_method=args.pd_method,
            sdim_method=SdimRoute.from_string(args.sdim_method),
            settings=settings,
            with_dim=args.with_dim,
        )
        emit(dumps_json(report.to_dict(), self._indent()), args.out)
        return 0

    def cmd_verify(self, args) -> int:
        """定理扫描；任一实例失败时退出码为 1"""
        settings = self.settings.with_verification(workers=args.workers, seed=args.seed)
        run = run_sweep(
            Parity.from_string(args.family),
            parse_int_list(args.ns, "ns"),
            parse_int_list(args.ms, "ms"),
            settings=settings,
        )
        emit(dumps_json(run.to_dict(), self._indent()), args.out)
        sys.stderr.write(run.human_summary())
        return 0 if run.passed else 1

    def cmd_random(self, args) -> int:
        """随机语料核对"""
        settings = self.settings.with_verification(
            workers=args.workers, seed=args.seed, random_corpus_size=args.count
        )
        report = run_random_suite(settings)
        emit(dumps_json(report.to_dict(), self._indent()), args.out)
        sys.stderr.write(f"random suite: {report.size - len(report.failures)}/{report.size} graphs passed\n")
        return 0 if report.passed else 1

    def cmd_srg(self, args) -> int:
        """强分辨图报告"""
        instance = parse_chain_spec(args.spec)
        lg = labeled_of(instance)
        if isinstance(instance, ChainCycle):
            srg = strong_resolving_graph(instance.graph, instance=instance.spec)
            srg.predicted = predicted_srg(instance)
            label_fn = instance.position_label
        else:
            srg = strong_resolving_graph(lg.graph, instance=args.spec)
            label_fn = lg.label
        cover = min_vertex_cover(srg.graph)
        data = srg.to_dict(label_fn)
        data.update(cover.to_dict(label_fn))
        emit(dumps_json(data, self._indent()), args.out)
        return 0

    def cmd_partition(self, args) -> int:
        """导出构造划分"""
        cc = self._chain(args.spec)
        emit(format_partition(cc.lg, constructed_partition(cc)), args.out)
        return 0

    def cmd_ledger(self, args) -> int:
        """公式核对报告；不一致只记录，不影响退出码"""
        report = claimed_representations(self._chain(args.spec))
        emit(dumps_json(report.to_dict(), self._indent()), args.out)
        return 0


def main(argv: Optional[List[str]] = None) -> int:
    """主函数"""
    cli = ChainCLI()
    return cli.run(argv)


if __name__ == '__main__':
    sys.exit(main())
