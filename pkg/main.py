"""
链环维数工具 - 主入口
等价于安装后的 chaindim 命令
"""

import sys
from pathlib import Path

# 添加项目根目录到Python路径
sys.path.insert(0, str(Path(__file__).parent))

from src.cli.chain_cli import main

if __name__ == "__main__":
    sys.exit(main())
